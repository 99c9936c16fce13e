#include "mveff/estimation.hpp"

#include <cmath>
#include <string>

#include "mveff/error.hpp"

namespace mveff {

ReturnSample::ReturnSample(MatrixXd x) : x_(std::move(x)) {
  if (x_.cols() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "return sample needs at least two assets");
  }
  if (x_.rows() <= x_.cols()) {
    throw Error(ErrorCode::SampleTooSmall,
                "need more observations than assets (n = " + std::to_string(x_.rows()) +
                    ", k = " + std::to_string(x_.cols()) + ")");
  }
  if (!x_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "return sample contains missing or non-finite values");
  }
}

EstimatedFrontier make_estimated_frontier(double r_hat, double v_hat, double s_hat,
                                          int n, int k) {
  const FrontierParams f = make_frontier_params(r_hat, v_hat, s_hat);
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be >= 2");
  if (n <= k) {
    throw Error(ErrorCode::SampleTooSmall, "n must exceed k");
  }
  return {f.r_gmv, f.v_gmv, f.s, n, k};
}

AssetMoments sample_moments(const ReturnSample& sample) {
  const MatrixXd& x = sample.data();
  const VectorXd mean = x.colwise().mean().transpose();
  const MatrixXd centered = x.rowwise() - mean.transpose();
  const MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(sample.n() - 1);
  return validate_moments(mean, cov);
}

EstimatedFrontier estimate_frontier(const ReturnSample& sample) {
  const FrontierParams f = frontier_params(sample_moments(sample));
  return {f.r_gmv, f.v_gmv, f.s, sample.n(), sample.k()};
}

EstimatedAlphaInverses estimated_alpha_inverses(const EstimatedFrontier& ef, double mu0,
                                                double alpha_tilde) {
  if (!(alpha_tilde > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha_tilde must be positive");
  }
  if (!(ef.s_hat > 0.0)) {
    throw Error(ErrorCode::DegenerateFrontier, "estimated slope is zero");
  }
  return {(mu0 - ef.r_hat) / ef.s_hat,
          (1.0 / alpha_tilde - 1.0 - ef.r_hat) / (1.0 + ef.s_hat)};
}

}  // namespace mveff
