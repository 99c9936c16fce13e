#include "mveff/moments.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mveff/error.hpp"

namespace mveff {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kSlopeClamp = 1e-12;

}  // namespace

MatrixXd AssetMoments::augmented() const {
  const VectorXd mt = mu_tilde();
  return sigma_ + mt * mt.transpose();
}

AssetMoments validate_moments(const VectorXd& mu, const MatrixXd& sigma) {
  const auto k = mu.size();
  if (k < 2) {
    throw Error(ErrorCode::DimensionMismatch, "need at least two assets, got k = " +
                                                  std::to_string(k));
  }
  if (sigma.rows() != k || sigma.cols() != k) {
    throw Error(ErrorCode::DimensionMismatch,
                "covariance is " + std::to_string(sigma.rows()) + "x" +
                    std::to_string(sigma.cols()) + " but mean has " + std::to_string(k) +
                    " entries");
  }
  if (!mu.allFinite() || !sigma.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "moments contain non-finite values");
  }
  const double asym = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    throw Error(ErrorCode::Asymmetric,
                "covariance not symmetric (max |S - S'| = " + std::to_string(asym) + ")");
  }
  MatrixXd sym = 0.5 * (sigma + sigma.transpose());

  Eigen::LLT<MatrixXd> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NotPositiveDefinite, "Cholesky factorization failed");
  }
  // LLT accepts pivots that are zero up to roundoff; reject those too.
  const double scale = sym.diagonal().maxCoeff();
  const MatrixXd l = llt.matrixL();
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(l(i, i) * l(i, i) > floor)) {
      throw Error(ErrorCode::NotPositiveDefinite,
                  "covariance is singular to working precision (pivot " +
                      std::to_string(i) + ")");
    }
  }
  return AssetMoments(mu, std::move(sym), std::move(llt));
}

FrontierParams make_frontier_params(double r_gmv, double v_gmv, double s) {
  if (!std::isfinite(r_gmv) || !std::isfinite(v_gmv) || !std::isfinite(s)) {
    throw Error(ErrorCode::InvalidArgument, "frontier parameters must be finite");
  }
  if (!(v_gmv > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "v_gmv must be positive");
  }
  if (s < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "slope s must be non-negative");
  }
  return {r_gmv, v_gmv, s};
}

EfficientSetConstants efficient_set_constants(const AssetMoments& m) {
  const VectorXd ones = VectorXd::Ones(m.k());
  const VectorXd si_mu = m.solve(m.mu());
  const VectorXd si_one = m.solve(ones);
  return {m.mu().dot(si_mu), ones.dot(si_mu), ones.dot(si_one)};
}

FrontierParams frontier_params(const AssetMoments& m) {
  const auto [a, b, c] = efficient_set_constants(m);
  // s = a - b^2/c evaluated on the centred means d = mu - r_gmv 1, where it
  // becomes a quadratic form plus a tiny correction (1'S^-1 d = 0 exactly).
  const VectorXd d = m.mu().array() - b / c;
  const VectorXd si_d = m.solve(d);
  const double drift = si_d.sum();
  double s = d.dot(si_d) - drift * drift / c;
  if (s < 0.0) {
    if (s > -kSlopeClamp) {
      s = 0.0;
    } else {
      throw Error(ErrorCode::InternalConsistency,
                  "negative frontier slope s = " + std::to_string(s));
    }
  }
  return {b / c, 1.0 / c, s};
}

QMatrix q_matrix(const AssetMoments& m) {
  const auto k = m.k();
  const MatrixXd sigma_inv = m.cholesky().solve(MatrixXd::Identity(k, k));
  const VectorXd si_one = sigma_inv.rowwise().sum();
  const double c = si_one.sum();
  MatrixXd q = sigma_inv - si_one * si_one.transpose() / c;
  // Exact symmetry for downstream eigen-decompositions.
  return {0.5 * (q + q.transpose())};
}

VectorXd apply_q(const AssetMoments& m, const VectorXd& v) {
  const VectorXd ones = VectorXd::Ones(m.k());
  const VectorXd si_v = m.solve(v);
  const VectorXd si_one = m.solve(ones);
  const double c = ones.dot(si_one);
  VectorXd y = si_v - si_one * (ones.dot(si_v) / c);
  // Second projection pass: removes the rounding left in 1'y when S^-1 v is
  // large compared with the result.
  y -= si_one * (ones.dot(y) / c);
  return y;
}

}  // namespace mveff
