#pragma once

#include "mveff/moments.hpp"

namespace mveff {

/// Fully invested portfolio (weights sum to one, initial wealth 1) together
/// with its mean-variance coordinates.
struct PortfolioWeights {
  VectorXd w;
  double expected_return = 0.0;
  double variance = 0.0;
};

PortfolioWeights make_portfolio(const AssetMoments& m, VectorXd w);

/// Slope parameter of the mean-variance utility. The infinite slope is a
/// distinguished value: the utility problem then returns the GMV portfolio.
class RiskSlope {
 public:
  static RiskSlope finite(double alpha);
  static RiskSlope infinite() { return RiskSlope(); }

  bool is_infinite() const { return infinite_; }
  /// Throws InvalidArgument for the infinite slope.
  double value() const;
  /// 1/alpha, zero for the infinite slope.
  double inverse() const { return infinite_ ? 0.0 : 1.0 / alpha_; }

 private:
  RiskSlope() = default;
  bool infinite_ = true;
  double alpha_ = 0.0;
};

enum class Branch { Upper, Lower };

PortfolioWeights gmv_weights(const AssetMoments& m);

/// Minimum variance for target return mu0 (closed form via a, b, c).
/// Throws DegenerateFrontier when s <= 1e-12 unless mu0 equals r_gmv to 1e-10.
PortfolioWeights solve_markowitz(const AssetMoments& m, double mu0);

/// Same solution written as w_gmv + ((mu0 - r_gmv)/s) Q mu.
PortfolioWeights solve_markowitz_reduced(const AssetMoments& m, double mu0);

/// Maximizes w'mu - alpha/2 w'Sigma w; solution w_gmv + alpha^-1 Q mu.
PortfolioWeights solve_mvu(const AssetMoments& m, RiskSlope alpha);
/// alpha > 0; +infinity is accepted as the GMV limit.
PortfolioWeights solve_mvu(const AssetMoments& m, double alpha);

/// Quadratic-utility weights in the augmented-matrix form
///   A^-1 1 / (1' A^-1 1) + alpha_tilde^-1 (A^-1 - A^-1 1 1' A^-1 / 1'A^-1 1) mu_tilde
/// with A = Sigma + mu_tilde mu_tilde'.
PortfolioWeights solve_qu_augmented(const AssetMoments& m, double alpha_tilde);

/// Reduced form w_gmv + ((alpha_tilde^-1 - 1 - r_gmv)/(1 + s)) Q mu.
PortfolioWeights solve_qu_reduced(const AssetMoments& m, double alpha_tilde);

/// Computes both quadratic-utility forms, checks that they agree to 1e-10
/// (relative to the weight scale) and returns the reduced form.
PortfolioWeights solve_qu(const AssetMoments& m, double alpha_tilde);

/// Expected return on the parabola at variance v >= v_gmv.
double frontier_point(const FrontierParams& f, double v, Branch branch);

/// Mean-variance coordinates of the three solutions computed from the
/// frontier parameters alone: every solution has the form w_gmv + g Q mu,
/// which sits at (v_gmv + g^2 s, r_gmv + g s).
struct MeanVariancePoint {
  double variance = 0.0;
  double expected_return = 0.0;
};

MeanVariancePoint markowitz_point(const FrontierParams& f, double mu0);
MeanVariancePoint mvu_point(const FrontierParams& f, RiskSlope alpha);
MeanVariancePoint qu_point(const FrontierParams& f, double alpha_tilde);

/// Residual (R - r_gmv)^2 - s (V - v_gmv) of a portfolio's coordinates.
double parabola_residual(const FrontierParams& f, const PortfolioWeights& p);

}  // namespace mveff
