#include <random>

#include <gtest/gtest.h>

#include "instances.hpp"
#include "mveff/error.hpp"
#include "mveff/estimation.hpp"
#include "mveff/mc_oracle.hpp"

using namespace mveff;

TEST(SampleMoments, HandExample) {
  MatrixXd x(3, 2);
  x << 0, 0, 1, 0, 0, 1;
  const AssetMoments m = sample_moments(ReturnSample(x));
  EXPECT_NEAR(m.mu()(0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.mu()(1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.sigma()(0, 0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.sigma()(0, 1), -1.0 / 6.0, 1e-15);
  EXPECT_NEAR(m.sigma()(1, 1), 1.0 / 3.0, 1e-15);
}

TEST(SampleMoments, RejectsDegenerateSamples) {
  MatrixXd constant = MatrixXd::Constant(10, 3, 0.01);
  try {
    sample_moments(ReturnSample(constant));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveDefinite);
  }
  try {
    ReturnSample(MatrixXd::Random(5, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SampleTooSmall);
  }
  MatrixXd missing = MatrixXd::Random(10, 3);
  missing(4, 1) = std::nan("");
  EXPECT_THROW(ReturnSample{missing}, Error);
}

TEST(SampleMoments, LargeSampleNearTruth) {
  std::mt19937_64 gen(9);
  const AssetMoments truth = fixtures::random_instance(gen, 3);
  SplitMix64 rng(123);
  const int n = 1000000;
  const AssetMoments m = sample_moments(simulate_sample(truth, n, rng));
  for (int i = 0; i < 3; ++i) {
    const double sd = std::sqrt(truth.sigma()(i, i));
    EXPECT_NEAR(m.mu()(i), truth.mu()(i), 3.0 * sd / std::sqrt(n));
    for (int j = 0; j < 3; ++j) {
      // Var of a sample covariance entry: (s_ii s_jj + s_ij^2) / n.
      const double se = std::sqrt((truth.sigma()(i, i) * truth.sigma()(j, j) +
                                   truth.sigma()(i, j) * truth.sigma()(i, j)) / n);
      EXPECT_NEAR(m.sigma()(i, j), truth.sigma()(i, j), 3.5 * se);
    }
  }
}

TEST(EstimateFrontier, IsComposition) {
  std::mt19937_64 gen(10);
  const AssetMoments truth = fixtures::random_instance(gen, 5);
  SplitMix64 rng(1);
  const ReturnSample s = simulate_sample(truth, 60, rng);
  const EstimatedFrontier ef = estimate_frontier(s);
  const FrontierParams f = frontier_params(sample_moments(s));
  EXPECT_EQ(ef.r_hat, f.r_gmv);
  EXPECT_EQ(ef.v_hat, f.v_gmv);
  EXPECT_EQ(ef.s_hat, f.s);
  EXPECT_EQ(ef.n, 60);
  EXPECT_EQ(ef.k, 5);
}

TEST(EstimateFrontier, LocationScaleCovariance) {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 50; ++trial) {
    const AssetMoments truth = fixtures::random_instance(gen, fixtures::random_k(gen));
    SplitMix64 rng(trial);
    const ReturnSample s = simulate_sample(truth, 40, rng);
    const double g = 2.5;
    const double d = 0.03;
    const EstimatedFrontier a = estimate_frontier(s);
    const EstimatedFrontier b = estimate_frontier(ReturnSample((g * s.data()).array() + d));
    EXPECT_NEAR(b.r_hat, g * a.r_hat + d, 1e-10);
    EXPECT_NEAR(b.v_hat, g * g * a.v_hat, 1e-10 * std::max(1.0, b.v_hat));
    EXPECT_NEAR(b.s_hat, a.s_hat, 1e-10 * std::max(1.0, a.s_hat));
  }
}

TEST(EstimatedAlphaInverses, Examples) {
  const EstimatedFrontier ef = make_estimated_frontier(0.0145664, 0.0010337, 0.221457, 60, 5);
  EXPECT_NEAR(estimated_alpha_inverses(ef, 0.0224823, 1.0).alpha1_inv, 0.035745, 1e-6);
  EXPECT_EQ(estimated_alpha_inverses(ef, ef.r_hat, 1.0).alpha1_inv, 0.0);
  EXPECT_NEAR(estimated_alpha_inverses(ef, 0.0, 1.0 / (1.0 + ef.r_hat)).alpha3_inv, 0.0, 1e-15);
  const EstimatedFrontier flat = make_estimated_frontier(0.01, 0.001, 0.0, 60, 5);
  try {
    estimated_alpha_inverses(flat, 0.02, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateFrontier);
  }
  EXPECT_THROW(make_estimated_frontier(0.01, 0.001, 0.1, 5, 5), Error);
}
