#pragma once

#include <random>

#include <Eigen/Dense>

#include "mveff/moments.hpp"

namespace mveff::fixtures {

/// Random positive-definite instance: Sigma = L L' + 1e-6 trace(L L') I with
/// Gaussian L, and a Gaussian mean vector of return-like magnitude.
inline AssetMoments random_instance(std::mt19937_64& rng, int k) {
  std::normal_distribution<double> z(0.0, 1.0);
  MatrixXd l(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) l(i, j) = 0.05 * z(rng);
  }
  MatrixXd sigma = l * l.transpose();
  sigma += 1e-6 * sigma.trace() * MatrixXd::Identity(k, k);
  VectorXd mu(k);
  for (int i = 0; i < k; ++i) mu(i) = 0.01 + 0.02 * z(rng);
  return validate_moments(mu, sigma);
}

/// k drawn uniformly from {2, ..., 10}.
inline int random_k(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(2, 10)(rng);
}

/// Minimum-variance weights under w'mu = mu0 and w'1 = 1 from the full KKT
/// system, solved with a dense pivoting LU and no closed-form shortcuts.
inline VectorXd kkt_markowitz(const MatrixXd& sigma, const VectorXd& mu, double mu0) {
  const int k = static_cast<int>(mu.size());
  MatrixXd kkt = MatrixXd::Zero(k + 2, k + 2);
  kkt.topLeftCorner(k, k) = 2.0 * sigma;
  kkt.block(0, k, k, 1) = mu;
  kkt.block(0, k + 1, k, 1) = VectorXd::Ones(k);
  kkt.block(k, 0, 1, k) = mu.transpose();
  kkt.block(k + 1, 0, 1, k) = VectorXd::Ones(k).transpose();
  VectorXd rhs = VectorXd::Zero(k + 2);
  rhs(k) = mu0;
  rhs(k + 1) = 1.0;
  return kkt.fullPivLu().solve(rhs).head(k);
}

inline AssetMoments identity_pair() {
  return validate_moments(VectorXd::Unit(2, 1), MatrixXd::Identity(2, 2));
}

}  // namespace mveff::fixtures
