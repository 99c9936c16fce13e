#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "instances.hpp"
#include "mveff/equivalence.hpp"
#include "mveff/error.hpp"
#include "mveff/solvers.hpp"

using namespace mveff;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void expect_weights(const VectorXd& w, std::initializer_list<double> expected, double tol = 1e-12) {
  ASSERT_EQ(w.size(), static_cast<Eigen::Index>(expected.size()));
  int i = 0;
  for (double e : expected) EXPECT_NEAR(w(i++), e, tol);
}

}  // namespace

TEST(Markowitz, HandExamples) {
  const AssetMoments m = fixtures::identity_pair();
  expect_weights(solve_markowitz(m, 1.0).w, {0.0, 1.0});
  const PortfolioWeights low = solve_markowitz(m, 0.0);
  expect_weights(low.w, {1.0, 0.0});
  EXPECT_FALSE(map_m_to_mvu(frontier_params(m), 0.0).efficient);
  expect_weights(solve_markowitz(m, 0.5).w, {0.5, 0.5});
  const VectorXd oracle = fixtures::kkt_markowitz(m.sigma(), m.mu(), 1.0);
  expect_weights(oracle, {0.0, 1.0});
}

TEST(Markowitz, DegenerateFrontier) {
  const AssetMoments flat = validate_moments(0.01 * VectorXd::Ones(3), MatrixXd::Identity(3, 3));
  EXPECT_NO_THROW(solve_markowitz(flat, 0.01));
  try {
    solve_markowitz(flat, 0.02);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateFrontier);
    EXPECT_TRUE(e.is_numeric());
  }
}

TEST(Mvu, HandExamples) {
  const AssetMoments m = fixtures::identity_pair();
  expect_weights(solve_mvu(m, 2.0).w, {0.25, 0.75});
  expect_weights(solve_mvu(m, 1.0).w, {0.0, 1.0});
  expect_weights(solve_mvu(m, std::numeric_limits<double>::infinity()).w, {0.5, 0.5});
  expect_weights(solve_mvu(m, 1e12).w, {0.5, 0.5}, 1e-11);
  EXPECT_THROW(solve_mvu(m, 0.0), Error);
  EXPECT_THROW(solve_mvu(m, -1.0), Error);
}

TEST(Qu, HandExamples) {
  const AssetMoments m = fixtures::identity_pair();
  expect_weights(solve_qu(m, 0.5).w, {1.0 / 3.0, 2.0 / 3.0});
  expect_weights(solve_qu(m, 1.0 / 1.5).w, {0.5, 0.5});
  const PortfolioWeights low = solve_qu(m, 2.0);
  EXPECT_LT(low.expected_return, frontier_params(m).r_gmv);
  EXPECT_THROW(solve_qu(m, 0.0), Error);
}

TEST(Gmv, HandExamples) {
  expect_weights(gmv_weights(fixtures::identity_pair()).w, {0.5, 0.5});
  MatrixXd sigma = MatrixXd::Zero(2, 2);
  sigma.diagonal() << 1.0, 4.0;
  const PortfolioWeights g = gmv_weights(validate_moments(VectorXd::Zero(2), sigma));
  expect_weights(g.w, {0.8, 0.2});
  EXPECT_NEAR(g.variance, 0.8, 1e-15);
}

TEST(FrontierPoint, Examples) {
  const FrontierParams f = make_frontier_params(0.014, 0.0011, 0.25);
  EXPECT_DOUBLE_EQ(frontier_point(f, 0.0011, Branch::Upper), 0.014);
  EXPECT_DOUBLE_EQ(frontier_point(f, 0.0011, Branch::Lower), 0.014);
  EXPECT_NEAR(frontier_point(f, 0.0027, Branch::Upper), 0.034, 1e-12);
  EXPECT_NEAR(frontier_point(f, 0.0027, Branch::Lower), -0.006, 1e-12);
  EXPECT_THROW(frontier_point(f, 0.001, Branch::Upper), Error);
}

TEST(MeanVariancePoints, MatchWeightCoordinates) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const AssetMoments m = fixtures::random_instance(rng, fixtures::random_k(rng));
    const FrontierParams f = frontier_params(m);
    const double mu0 = f.r_gmv + 0.3 * (trial % 7 - 3) * std::sqrt(f.s * f.v_gmv);
    const PortfolioWeights pm = solve_markowitz(m, mu0);
    const MeanVariancePoint qm = markowitz_point(f, mu0);
    EXPECT_NEAR(qm.variance, pm.variance, 1e-10 * std::max(1.0, pm.variance));
    EXPECT_NEAR(qm.expected_return, pm.expected_return, 1e-10);
    const PortfolioWeights pu = solve_mvu(m, 3.0);
    const MeanVariancePoint qu = mvu_point(f, RiskSlope::finite(3.0));
    EXPECT_NEAR(qu.variance, pu.variance, 1e-10 * std::max(1.0, pu.variance));
    EXPECT_NEAR(qu.expected_return, pu.expected_return, 1e-10);
    const PortfolioWeights pq = solve_qu(m, 0.97);
    const MeanVariancePoint qq = qu_point(f, 0.97);
    EXPECT_NEAR(qq.variance, pq.variance, 1e-10 * std::max(1.0, pq.variance));
    EXPECT_NEAR(qq.expected_return, pq.expected_return, 1e-10);
  }
}

TEST(SolverProperties, RandomInstances) {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const AssetMoments m = fixtures::random_instance(rng, fixtures::random_k(rng));
    const FrontierParams f = frontier_params(m);
    const double spread = std::sqrt(f.s * f.v_gmv);
    const double mu0 = f.r_gmv + u(rng) * spread;
    const double alpha = std::exp(u(rng)) * std::max(f.s, 1e-3);
    // Offset bounded so that alpha_tilde^-1 stays above (1 + r_gmv) / 2.
    const double g = 0.5 * u(rng) * std::min(1.0 / alpha, 0.5 * (1.0 + f.r_gmv) / (1.0 + f.s));
    const double alpha_tilde = 1.0 / (1.0 + f.r_gmv + g * (1.0 + f.s));
    const PortfolioWeights gmv = gmv_weights(m);
    const Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<MatrixXd>(m.sigma()).eigenvalues();
    const double cond = eig.maxCoeff() / eig.minCoeff();

    const PortfolioWeights outputs[] = {solve_markowitz(m, mu0), solve_markowitz_reduced(m, mu0),
                                        solve_mvu(m, alpha), solve_qu_augmented(m, alpha_tilde),
                                        solve_qu_reduced(m, alpha_tilde), gmv};
    for (const PortfolioWeights& p : outputs) {
      EXPECT_NEAR(p.w.sum(), 1.0, 1e-10);
      EXPECT_NEAR(parabola_residual(f, p), 0.0, 1e-8);
      EXPECT_GE(p.variance, f.v_gmv - 1e-10);
      const Branch branch = p.expected_return >= f.r_gmv ? Branch::Upper : Branch::Lower;
      // At the vertex an error dV in V - v_gmv becomes sqrt(s dV) in the
      // recovered return; v_gmv = 1/c carries relative error ~ cond(Sigma) eps.
      const double vertex_slack = std::sqrt(f.s * 16.0 * cond * kEps * p.variance);
      EXPECT_NEAR(frontier_point(f, std::max(p.variance, f.v_gmv), branch), p.expected_return,
                  1e-8 + vertex_slack);
    }
    EXPECT_GE(outputs[2].expected_return, f.r_gmv - 1e-12);
    EXPECT_LE(gmv.variance, outputs[2].variance + 1e-15);
    EXPECT_NEAR(outputs[0].expected_return, mu0, 1e-10);
    EXPECT_LT((outputs[0].w - outputs[1].w).cwiseAbs().maxCoeff(), 1e-9);
    const double scale = std::max(1.0, outputs[4].w.cwiseAbs().maxCoeff());
    EXPECT_LT((outputs[3].w - outputs[4].w).cwiseAbs().maxCoeff(), 1e-10 * scale);
  }
}

TEST(SolverProperties, MarkowitzMatchesKktOracle) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    const AssetMoments m = fixtures::random_instance(rng, k);
    const FrontierParams f = frontier_params(m);
    const double mu0 = f.r_gmv + u(rng) * std::sqrt(f.s * f.v_gmv);
    const VectorXd oracle = fixtures::kkt_markowitz(m.sigma(), m.mu(), mu0);
    EXPECT_LT((solve_markowitz(m, mu0).w - oracle).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(SolverProperties, MvuBeatsRandomFeasiblePortfolios) {
  std::mt19937_64 rng(404);
  std::normal_distribution<double> z;
  for (int trial = 0; trial < 5; ++trial) {
    const int k = 5;
    const AssetMoments m = fixtures::random_instance(rng, k);
    const double alpha = 2.0 + trial;
    const auto utility = [&](const VectorXd& w) {
      return w.dot(m.mu()) - 0.5 * alpha * w.dot(m.sigma() * w);
    };
    const PortfolioWeights best = solve_mvu(m, alpha);
    const double u_best = utility(best.w);
    for (int i = 0; i < 10000; ++i) {
      VectorXd w(k);
      for (int j = 0; j < k; ++j) w(j) = best.w(j) + z(rng) * (i % 2 ? 0.01 : 1.0);
      w.array() += (1.0 - w.sum()) / k;
      ASSERT_LE(utility(w), u_best + 1e-9);
    }
  }
}
