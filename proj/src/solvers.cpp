#include "mveff/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mveff/error.hpp"

namespace mveff {

namespace {

constexpr double kDegenerateSlope = 1e-12;
constexpr double kTargetTol = 1e-10;
constexpr double kFormAgreement = 1e-10;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || std::isnan(x)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
  }
}

}  // namespace

RiskSlope RiskSlope::finite(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "risk slope must be finite and positive");
  }
  RiskSlope r;
  r.infinite_ = false;
  r.alpha_ = alpha;
  return r;
}

double RiskSlope::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "risk slope is infinite");
  return alpha_;
}

PortfolioWeights make_portfolio(const AssetMoments& m, VectorXd w) {
  PortfolioWeights p;
  p.expected_return = w.dot(m.mu());
  p.variance = w.dot(m.sigma() * w);
  p.w = std::move(w);
  return p;
}

PortfolioWeights gmv_weights(const AssetMoments& m) {
  const VectorXd si_one = m.solve(VectorXd::Ones(m.k()));
  return make_portfolio(m, si_one / si_one.sum());
}

PortfolioWeights solve_markowitz(const AssetMoments& m, double mu0) {
  const FrontierParams f = frontier_params(m);
  if (f.s <= kDegenerateSlope) {
    if (std::abs(mu0 - f.r_gmv) <= kTargetTol) return gmv_weights(m);
    throw Error(ErrorCode::DegenerateFrontier,
                "mean vector is proportional to 1; only mu0 = r_gmv is attainable");
  }
  const auto [a, b, c] = efficient_set_constants(m);
  const double det = a * c - b * b;
  const VectorXd si_one = m.solve(VectorXd::Ones(m.k()));
  const VectorXd si_mu = m.solve(m.mu());
  const auto kkt_step = [&](double budget, double target) -> VectorXd {
    return ((a * budget - b * target) / det) * si_one + ((c * target - b * budget) / det) * si_mu;
  };
  VectorXd w = kkt_step(1.0, mu0);
  // One refinement step on the two constraints; the closed-form coefficients
  // grow like 1/det and leave rounding in 1'w and mu'w on flat frontiers.
  w += kkt_step(1.0 - w.sum(), mu0 - w.dot(m.mu()));
  return make_portfolio(m, std::move(w));
}

PortfolioWeights solve_markowitz_reduced(const AssetMoments& m, double mu0) {
  const FrontierParams f = frontier_params(m);
  if (f.s <= kDegenerateSlope) return solve_markowitz(m, mu0);
  const PortfolioWeights gmv = gmv_weights(m);
  VectorXd w = gmv.w + ((mu0 - f.r_gmv) / f.s) * apply_q(m, m.mu());
  return make_portfolio(m, std::move(w));
}

PortfolioWeights solve_mvu(const AssetMoments& m, RiskSlope alpha) {
  PortfolioWeights gmv = gmv_weights(m);
  if (alpha.is_infinite()) return gmv;
  VectorXd w = gmv.w + alpha.inverse() * apply_q(m, m.mu());
  return make_portfolio(m, std::move(w));
}

PortfolioWeights solve_mvu(const AssetMoments& m, double alpha) {
  if (std::isinf(alpha) && alpha > 0.0) return solve_mvu(m, RiskSlope::infinite());
  return solve_mvu(m, RiskSlope::finite(alpha));
}

PortfolioWeights solve_qu_augmented(const AssetMoments& m, double alpha_tilde) {
  require_positive(alpha_tilde, "alpha_tilde");
  const Eigen::LLT<MatrixXd> llt(m.augmented());
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NotPositiveDefinite, "augmented second-moment matrix");
  }
  const VectorXd ones = VectorXd::Ones(m.k());
  const VectorXd mt = m.mu_tilde();
  const VectorXd ai_one = llt.solve(ones);
  const VectorXd ai_mt = llt.solve(mt);
  const double c_a = ones.dot(ai_one);
  const VectorXd projected = ai_mt - ai_one * (ones.dot(ai_mt) / c_a);
  VectorXd w = ai_one / c_a + (1.0 / alpha_tilde) * projected;
  return make_portfolio(m, std::move(w));
}

PortfolioWeights solve_qu_reduced(const AssetMoments& m, double alpha_tilde) {
  require_positive(alpha_tilde, "alpha_tilde");
  const FrontierParams f = frontier_params(m);
  const double coef = (1.0 / alpha_tilde - 1.0 - f.r_gmv) / (1.0 + f.s);
  VectorXd w = gmv_weights(m).w + coef * apply_q(m, m.mu());
  return make_portfolio(m, std::move(w));
}

PortfolioWeights solve_qu(const AssetMoments& m, double alpha_tilde) {
  PortfolioWeights reduced = solve_qu_reduced(m, alpha_tilde);
  const PortfolioWeights full = solve_qu_augmented(m, alpha_tilde);
  const double scale = std::max(1.0, reduced.w.cwiseAbs().maxCoeff());
  const double gap = (reduced.w - full.w).cwiseAbs().maxCoeff();
  if (gap > kFormAgreement * scale) {
    throw Error(ErrorCode::InternalConsistency,
                "quadratic-utility forms disagree by " + std::to_string(gap));
  }
  return reduced;
}

double frontier_point(const FrontierParams& f, double v, Branch branch) {
  if (!(v >= f.v_gmv)) {
    throw Error(ErrorCode::InvalidArgument, "variance below the GMV variance");
  }
  const double half_width = std::sqrt(f.s * (v - f.v_gmv));
  return branch == Branch::Upper ? f.r_gmv + half_width : f.r_gmv - half_width;
}

namespace {

MeanVariancePoint point_at(const FrontierParams& f, double g) {
  return {f.v_gmv + g * g * f.s, f.r_gmv + g * f.s};
}

}  // namespace

MeanVariancePoint markowitz_point(const FrontierParams& f, double mu0) {
  if (f.s <= kDegenerateSlope) {
    if (std::abs(mu0 - f.r_gmv) <= kTargetTol) return point_at(f, 0.0);
    throw Error(ErrorCode::DegenerateFrontier, "zero frontier slope: mu0 must equal r_gmv");
  }
  const double dr = mu0 - f.r_gmv;
  return {f.v_gmv + dr * dr / f.s, mu0};
}

MeanVariancePoint mvu_point(const FrontierParams& f, RiskSlope alpha) {
  return point_at(f, alpha.inverse());
}

MeanVariancePoint qu_point(const FrontierParams& f, double alpha_tilde) {
  require_positive(alpha_tilde, "alpha_tilde");
  return point_at(f, (1.0 / alpha_tilde - 1.0 - f.r_gmv) / (1.0 + f.s));
}

double parabola_residual(const FrontierParams& f, const PortfolioWeights& p) {
  const double dr = p.expected_return - f.r_gmv;
  return dr * dr - f.s * (p.variance - f.v_gmv);
}

}  // namespace mveff
