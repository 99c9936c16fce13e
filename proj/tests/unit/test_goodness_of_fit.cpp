#include <cmath>
#include <random>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <gtest/gtest.h>

#include "mveff/error.hpp"
#include "mveff/goodness_of_fit.hpp"
#include "mveff/statfns.hpp"

using namespace mveff;

TEST(Kolmogorov, KnownValues) {
  EXPECT_NEAR(gof::kolmogorov_survival(1.36), 0.0494, 5e-4);
  EXPECT_NEAR(gof::kolmogorov_survival(1.63), 0.0098, 5e-4);
  EXPECT_NEAR(gof::kolmogorov_survival(0.0), 1.0, 1e-12);
  EXPECT_LT(gof::kolmogorov_survival(5.0), 1e-20);
}

TEST(Ks, AcceptsTrueLawRejectsShifted) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> z;
  std::vector<double> x(10000);
  for (double& v : x) v = z(rng);
  EXPECT_GT(gof::ks_test(x, statfns::norm_cdf).p_value, 0.01);
  EXPECT_LT(gof::ks_test(x, [](double t) { return statfns::norm_cdf(t - 0.1); }).p_value, 1e-6);
}

TEST(Ks, IncrementalCdfMatchesClosedForm) {
  std::vector<double> pts{-3.0, -3.0, -1.0, 0.0, 0.2, 2.5};
  const auto cdf = gof::integrate_cdf_at(statfns::norm_pdf, -std::numeric_limits<double>::infinity(), pts);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_NEAR(cdf[i], statfns::norm_cdf(pts[i]), 1e-9);
  const auto below = gof::integrate_cdf_at([](double x) { return statfns::chi2_pdf(x, 3); }, 0.0,
                                           std::vector<double>{-2.0, -1.0, 1.0});
  EXPECT_EQ(below[0], 0.0);
  EXPECT_EQ(below[1], 0.0);
  EXPECT_NEAR(below[2], boost::math::cdf(boost::math::chi_squared(3), 1.0), 1e-9);
  EXPECT_THROW(gof::integrate_cdf_at(statfns::norm_pdf, 0.0, std::vector<double>{1.0, 0.5}), Error);
}

TEST(TabulatedCdf, InterpolatesSmoothLaw) {
  const gof::TabulatedCdf cdf(statfns::norm_pdf, -8.0, 8.0, 400, statfns::norm_cdf(-8.0));
  // Cubic Hermite error bound h^4 / 384 * max|pdf''| with h = 0.04 is about 9e-9.
  for (double x = -7.9; x < 8.0; x += 0.173) EXPECT_NEAR(cdf(x), statfns::norm_cdf(x), 1e-8);
  EXPECT_NEAR(cdf.total(), 1.0, 1e-12);
  EXPECT_NEAR(cdf(-20.0), 0.0, 1e-14);
}

TEST(Correlation, KnownCases) {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{2, 4, 6, 8, 10};
  const std::vector<double> c{5, 4, 3, 2, 1};
  EXPECT_NEAR(gof::pearson_correlation(a, b), 1.0, 1e-15);
  EXPECT_NEAR(gof::pearson_correlation(a, c), -1.0, 1e-15);
}

TEST(ChiSquare, SurvivalAndIndependence) {
  for (int dof : {1, 4, 9, 30}) {
    for (double x : {0.5, 3.0, 9.0, 25.0}) {
      EXPECT_NEAR(gof::chi2_survival(x, dof), boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), x)),
                  1e-9);
    }
  }
  std::mt19937_64 rng(8);
  std::normal_distribution<double> z;
  std::vector<double> x(20000), y(20000), w(20000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = z(rng);
    y[i] = z(rng);
    w[i] = x[i] + 0.3 * z(rng);
  }
  const auto indep = gof::chi2_independence(x, y, 4);
  EXPECT_EQ(indep.dof, 9);
  EXPECT_GT(indep.p_value, 0.01);
  EXPECT_LT(gof::chi2_independence(x, w, 4).p_value, 1e-10);
}
