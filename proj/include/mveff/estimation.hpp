#pragma once

#include <utility>

#include "mveff/moments.hpp"

namespace mveff {

/// n x k matrix of per-period returns (rows are periods). Requires n > k and
/// finite entries; missing values are rejected, never imputed.
class ReturnSample {
 public:
  explicit ReturnSample(MatrixXd x);

  int n() const { return static_cast<int>(x_.rows()); }
  int k() const { return static_cast<int>(x_.cols()); }
  const MatrixXd& data() const { return x_; }

 private:
  MatrixXd x_;
};

struct EstimatedFrontier {
  double r_hat = 0.0;
  double v_hat = 0.0;
  double s_hat = 0.0;
  int n = 0;
  int k = 0;

  FrontierParams params() const { return {r_hat, v_hat, s_hat}; }
};

/// Injects published estimates directly (no raw data). Validates v_hat > 0,
/// s_hat >= 0 and n > k >= 2.
EstimatedFrontier make_estimated_frontier(double r_hat, double v_hat, double s_hat,
                                          int n, int k);

/// Sample mean and unbiased (n - 1) covariance, validated as AssetMoments.
AssetMoments sample_moments(const ReturnSample& sample);

EstimatedFrontier estimate_frontier(const ReturnSample& sample);

struct EstimatedAlphaInverses {
  double alpha1_inv = 0.0;  // Markowitz target
  double alpha3_inv = 0.0;  // quadratic utility
};

/// Plug-in utility-slope inverses. Throws DegenerateFrontier when s_hat == 0.
EstimatedAlphaInverses estimated_alpha_inverses(const EstimatedFrontier& ef, double mu0,
                                                double alpha_tilde);

}  // namespace mveff
