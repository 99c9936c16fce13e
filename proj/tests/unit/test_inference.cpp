#include <cmath>
#include <limits>

#include <boost/math/distributions/non_central_f.hpp>
#include <boost/math/distributions/non_central_t.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "mveff/error.hpp"
#include "mveff/inference.hpp"
#include "mveff/quadrature.hpp"
#include "mveff/statfns.hpp"

namespace bm = boost::math;
using namespace mveff;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const SampleShape kShape{60, 5};

double scale_c0(SampleShape sh) {
  const double n = sh.n;
  const double k = sh.k;
  return n * (n - k + 1.0) / ((n - 1.0) * (k - 1.0));
}

/// Independent evaluation with Boost distributions and Boost quadrature:
/// P = E[ Phi(-lambda / sqrt(1/n + Y/(n-1))) ] over the law of s_hat.
double oracle_prob(double lambda, double s, SampleShape sh) {
  const double c0 = scale_c0(sh);
  const bm::non_central_f law(sh.k - 1, sh.n - sh.k + 1, sh.n * s);
  const bm::normal z;
  const auto f = [&](double y) {
    const double sd = std::sqrt(1.0 / sh.n + y / (sh.n - 1.0));
    return bm::cdf(z, -lambda / sd) * c0 * bm::pdf(law, c0 * y);
  };
  return bm::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, kInf, 20, 1e-13);
}

/// Power as E[ F_nct(crit; n-k, delta(Y)) ] with the Boost non-central t CDF.
double oracle_power(double lambda, double s, SampleShape sh, double beta) {
  const double c0 = scale_c0(sh);
  const double p = sh.n - sh.k;
  const double crit = -statfns::t_quantile(1.0 - beta, p);
  const bm::non_central_f law(sh.k - 1, sh.n - sh.k + 1, sh.n * s);
  const auto f = [&](double y) {
    const double delta = -std::sqrt(sh.n) * lambda / std::sqrt(1.0 + sh.n * y / (sh.n - 1.0));
    return bm::cdf(bm::non_central_t(p, delta), crit) * c0 * bm::pdf(law, c0 * y);
  };
  return bm::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, kInf, 20, 1e-12);
}

}  // namespace

TEST(ProbInefficient, SymmetryPointAndTail) {
  const FrontierParams f = make_frontier_params(0.014, 0.0011, 0.25);
  EXPECT_NEAR(prob_inefficient_m(f, kShape, 0.014), 0.5, 1e-8);
  EXPECT_NEAR(prob_inefficient_qu(f, kShape, 1.0 / 1.014), 0.5, 1e-8);
  EXPECT_LT(prob_inefficient(20.0, 0.25, kShape), 1e-6);
}

TEST(ProbInefficient, MatchesBoostOracle) {
  for (double s : {0.0, 0.05, 0.25, 1.25, 4.0}) {
    for (double lambda : {-0.5, -0.2, 0.05, 0.3, 0.5, 1.0}) {
      EXPECT_NEAR(prob_inefficient(lambda, s, kShape), oracle_prob(lambda, s, kShape), 1e-8)
          << s << " " << lambda;
    }
  }
  EXPECT_NEAR(prob_inefficient(0.2, 0.5, {25, 10}), oracle_prob(0.2, 0.5, {25, 10}), 1e-8);
}

TEST(ProbInefficient, DecreasingAndMirrored) {
  for (double s : {0.05, 0.25, 1.25}) {
    double prev = 2.0;
    for (int i = 0; i <= 20; ++i) {
      const double lambda = -0.5 + 0.05 * i;
      const double p = prob_inefficient(lambda, s, kShape);
      EXPECT_LT(p, prev);
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
      prev = p;
      EXPECT_NEAR(p + prob_inefficient(-lambda, s, kShape), 1.0, 1e-8);
    }
  }
}

TEST(ProbInefficient, MappingOfProblems) {
  const FrontierParams f = make_frontier_params(0.014, 0.0011, 0.25);
  EXPECT_DOUBLE_EQ(prob_inefficient_m(f, kShape, 0.02),
                   prob_inefficient(lambda_m(f, 0.02), f.s, kShape));
  EXPECT_DOUBLE_EQ(prob_inefficient_qu(f, kShape, 0.97),
                   prob_inefficient(lambda_qu(f, 0.97), f.s, kShape));
  EXPECT_NEAR(lambda_qu(f, 1.0 / (1.0 + 0.02)), lambda_m(f, 0.02), 1e-13);
}

TEST(ProbInefficient, NearZeroSlopeDiagnostic) {
  // Recorded, not asserted against 0.5: the limit claim only holds at lambda = 0.
  const double p = prob_inefficient(0.3, 1e-6, kShape);
  EXPECT_GT(p, 0.0);
  EXPECT_LT(p, 0.5);
  RecordProperty("prob_at_lambda_0.3_s_1e-6", std::to_string(p));
}

TEST(Tests, StatisticAndDecisions) {
  const EstimatedFrontier ef = make_estimated_frontier(0.0145664, 0.0010337, 0.221457, 60, 5);
  EXPECT_EQ(t1_statistic(ef, ef.r_hat), 0.0);
  for (double beta : {0.01, 0.05, 0.2, 0.49}) EXPECT_FALSE(test_m_efficiency(ef, ef.r_hat, beta).accept_efficiency);
  EXPECT_TRUE(test_m_efficiency(ef, 1.0, 0.05).accept_efficiency);

  const double expected = std::sqrt(60.0 / ef.v_hat) * std::sqrt(55.0 / 59.0) * (ef.r_hat - 0.02) /
                          std::sqrt(1.0 + 60.0 / 59.0 * ef.s_hat);
  EXPECT_NEAR(t1_statistic(ef, 0.02), expected, 1e-12);

  double prev = kInf;
  for (double mu0 = 0.0; mu0 < 0.05; mu0 += 0.001) {
    const TestResult r = test_m_efficiency(ef, mu0, 0.05);
    EXPECT_LT(r.statistic, prev);
    prev = r.statistic;
    EXPECT_EQ(r.accept_efficiency, r.statistic < r.critical_value);
    EXPECT_NEAR(r.p_value, statfns::t_cdf(r.statistic, 55.0), 1e-14);
    EXPECT_GE(r.p_value, 0.0);
    EXPECT_LE(r.p_value, 1.0);
  }
  for (double at : {0.95, 0.978, 1.0}) {
    EXPECT_DOUBLE_EQ(test_qu_efficiency(ef, at, 0.05).statistic, t1_statistic(ef, 1.0 / at - 1.0));
  }
  EXPECT_NEAR(test_qu_efficiency(ef, 1.0 / (1.0 + ef.r_hat), 0.05).statistic, 0.0, 1e-12);
  EXPECT_THROW(test_m_efficiency(ef, 0.02, 0.0), Error);
}

TEST(Tests, WorkedExampleThresholds) {
  const EstimatedFrontier ef = make_estimated_frontier(0.0145664, 0.0010337, 0.221457, 60, 5);
  EXPECT_NEAR(m_acceptance_threshold(ef, 0.05), 0.0224823, 1e-3);
  EXPECT_NEAR(qu_acceptance_threshold(ef, 0.05), 0.978012, 1e-3);
  EXPECT_NEAR(m_acceptance_threshold(ef, 0.5), ef.r_hat, 1e-12);
  const double mu = m_acceptance_threshold(ef, 0.05);
  EXPECT_FALSE(test_m_efficiency(ef, mu - 1e-9, 0.05).accept_efficiency);
  EXPECT_TRUE(test_m_efficiency(ef, mu + 1e-9, 0.05).accept_efficiency);
  const double at = qu_acceptance_threshold(ef, 0.05);
  EXPECT_TRUE(test_qu_efficiency(ef, at - 1e-9, 0.05).accept_efficiency);
  EXPECT_FALSE(test_qu_efficiency(ef, at + 1e-9, 0.05).accept_efficiency);
}

TEST(Power, SizeAtBoundary) {
  for (double s : {0.05, 0.25, 1.25}) {
    EXPECT_NEAR(power_at_lambda(0.0, s, kShape, 0.05), 0.05, 2e-3);
    EXPECT_NEAR(power_at_lambda(0.0, s, kShape, 0.5), 0.5, 2e-3);
  }
}

TEST(Power, MatchesBoostNoncentralTOracle) {
  for (double s : {0.05, 0.25, 1.25}) {
    for (double lambda : {-0.3, 0.0, 0.1, 0.25, 0.5, 1.0}) {
      EXPECT_NEAR(power_at_lambda(lambda, s, kShape, 0.05), oracle_power(lambda, s, kShape, 0.05), 1e-7)
          << s << " " << lambda;
    }
  }
}

TEST(Power, FarTargetIsAlmostSurelyAccepted) {
  // A target three GMV standard deviations above the GMV return.
  EXPECT_GT(power_at_lambda(3.0, 0.25, kShape, 0.05), 0.99);
  EXPECT_LT(power_at_lambda(-3.0, 0.25, kShape, 0.05), 1e-6);
}

TEST(Power, AgreesWithIntegratedDensity) {
  const FrontierParams f = make_frontier_params(0.014, 0.0011, 0.25);
  const double mu0 = 0.014 + 0.2 * std::sqrt(0.0011);
  const double crit = -statfns::t_quantile(0.95, 55.0);
  const auto pdf = [&](double x) { return density_t1(x, f, kShape, mu0); };
  const double via_density = quad::integrate_from_minus_infinity(pdf, crit, {}, 2.0).value;
  EXPECT_NEAR(via_density, power_m_test(f, kShape, mu0, 0.05), 1e-7);
}

TEST(DensityT1, NormalizesAndCollapses) {
  const FrontierParams f = make_frontier_params(0.014, 0.0011, 0.25);
  for (double lambda : {-0.5, 0.0, 0.5}) {
    const double mu0 = f.r_gmv + lambda * std::sqrt(f.v_gmv);
    const auto pdf = [&](double x) { return density_t1(x, f, kShape, mu0); };
    const double total = quad::integrate_from_minus_infinity(pdf, 0.0, {}, 2.0).value +
                         quad::integrate_to_infinity(pdf, 0.0, {}, 2.0).value;
    EXPECT_NEAR(total, 1.0, 1e-5);
  }
  const FrontierParams flat = make_frontier_params(0.014, 0.0011, 1e-8);
  for (double x : {-2.0, 0.0, 1.0}) {
    EXPECT_NEAR(density_t1(x, flat, kShape, 0.014), statfns::t_pdf(x, 55.0), 1e-6);
  }
}

TEST(Curves, ParallelMatchesSerial) {
  std::vector<double> lambdas;
  for (int i = 0; i <= 40; ++i) lambdas.push_back(-1.0 + 0.05 * i);
  const auto ps = prob_inefficient_curve(lambdas, 0.25, kShape, {}, Execution::Serial);
  const auto pp = prob_inefficient_curve(lambdas, 0.25, kShape, {}, Execution::Parallel);
  const auto ws = power_curve(lambdas, 0.25, kShape, 0.05, {}, Execution::Serial);
  const auto wp = power_curve(lambdas, 0.25, kShape, 0.05, {}, Execution::Parallel);
  ASSERT_EQ(ps.size(), lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    EXPECT_EQ(ps[i], pp[i]);
    EXPECT_EQ(ws[i], wp[i]);
    EXPECT_EQ(ps[i], prob_inefficient(lambdas[i], 0.25, kShape));
  }
}
