#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

namespace mveff {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Validated mean vector and positive-definite covariance of k asset
/// returns. Immutable after construction; every application of the inverse
/// covariance goes through the cached Cholesky factor.
class AssetMoments {
 public:
  int k() const { return static_cast<int>(mu_.size()); }
  const VectorXd& mu() const { return mu_; }
  const MatrixXd& sigma() const { return sigma_; }
  const Eigen::LLT<MatrixXd>& cholesky() const { return llt_; }

  /// Sigma^{-1} v via two triangular solves.
  VectorXd solve(const VectorXd& v) const { return llt_.solve(v); }

  /// 1 + mu (gross returns).
  VectorXd mu_tilde() const { return VectorXd::Ones(k()) + mu_; }

  /// Second moment of gross returns, Sigma + mu_tilde mu_tilde'.
  MatrixXd augmented() const;

 private:
  friend AssetMoments validate_moments(const VectorXd& mu, const MatrixXd& sigma);
  AssetMoments(VectorXd mu, MatrixXd sigma, Eigen::LLT<MatrixXd> llt)
      : mu_(std::move(mu)), sigma_(std::move(sigma)), llt_(std::move(llt)) {}

  VectorXd mu_;
  MatrixXd sigma_;
  Eigen::LLT<MatrixXd> llt_;
};

/// Checks dimensions, symmetry (to 1e-12) and positive definiteness.
/// Throws DimensionMismatch, Asymmetric or NotPositiveDefinite.
AssetMoments validate_moments(const VectorXd& mu, const MatrixXd& sigma);

// a = mu' S^-1 mu, b = 1' S^-1 mu, c = 1' S^-1 1
struct EfficientSetConstants {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Vertex and slope of the parabola (R - r_gmv)^2 = s (V - v_gmv).
struct FrontierParams {
  double r_gmv = 0.0;
  double v_gmv = 0.0;
  double s = 0.0;
};

/// Builds FrontierParams from raw numbers (e.g. published estimates).
/// Requires v_gmv > 0 and s >= 0.
FrontierParams make_frontier_params(double r_gmv, double v_gmv, double s);

struct QMatrix {
  MatrixXd q;
};

EfficientSetConstants efficient_set_constants(const AssetMoments& m);

/// r_gmv = b/c, v_gmv = 1/c, s = a - b^2/c. Roundoff negatives of s with
/// magnitude below 1e-12 are clamped to 0; anything larger is an
/// InternalConsistency error.
FrontierParams frontier_params(const AssetMoments& m);

/// Q = S^-1 - S^-1 1 1' S^-1 / (1' S^-1 1).
QMatrix q_matrix(const AssetMoments& m);

/// Q v without forming Q.
VectorXd apply_q(const AssetMoments& m, const VectorXd& v);

}  // namespace mveff
