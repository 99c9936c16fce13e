#include "mveff/equivalence.hpp"

#include <cmath>

#include "mveff/error.hpp"

namespace mveff {

namespace {

constexpr double kWeightTol = 1e-9;

EquivalenceResult from_inverse(double alpha_inv, double lambda) {
  EquivalenceResult r;
  r.alpha_inv = alpha_inv;
  r.lambda = lambda;
  r.efficient = alpha_inv >= 0.0;
  if (alpha_inv == 0.0 || (alpha_inv > 0.0 && std::isinf(1.0 / alpha_inv))) {
    r.alpha = RiskSlope::infinite();
  } else if (alpha_inv > 0.0) {
    r.alpha = RiskSlope::finite(1.0 / alpha_inv);
  }
  return r;
}

}  // namespace

EquivalenceResult map_m_to_mvu(const FrontierParams& f, double mu0) {
  const double gap = mu0 - f.r_gmv;
  const double lambda = gap / std::sqrt(f.v_gmv);
  if (gap == 0.0) return from_inverse(0.0, 0.0);
  if (!(f.s > 0.0)) {
    throw Error(ErrorCode::DegenerateFrontier,
                "zero frontier slope: only mu0 = r_gmv maps to the utility problem");
  }
  return from_inverse(gap / f.s, lambda);
}

EquivalenceResult map_qu_to_mvu(const FrontierParams& f, double alpha_tilde) {
  if (!(alpha_tilde > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha_tilde must be positive");
  }
  const double gap = 1.0 / alpha_tilde - 1.0 - f.r_gmv;
  return from_inverse(gap / (1.0 + f.s), gap / std::sqrt(f.v_gmv));
}

bool verify_equivalence_m(const AssetMoments& m, double mu0) {
  const EquivalenceResult map = map_m_to_mvu(frontier_params(m), mu0);
  if (!map.efficient) {
    throw Error(ErrorCode::InvalidArgument,
                "Markowitz target lies below the GMV return; no equivalent utility slope");
  }
  const VectorXd lhs = solve_markowitz(m, mu0).w;
  const VectorXd rhs = solve_mvu(m, *map.alpha).w;
  return (lhs - rhs).cwiseAbs().maxCoeff() < kWeightTol;
}

bool verify_equivalence_qu(const AssetMoments& m, double alpha_tilde) {
  const EquivalenceResult map = map_qu_to_mvu(frontier_params(m), alpha_tilde);
  if (!map.efficient) {
    throw Error(ErrorCode::InvalidArgument,
                "quadratic-utility coefficient too large; no equivalent utility slope");
  }
  const VectorXd lhs = solve_qu(m, alpha_tilde).w;
  const VectorXd rhs = solve_mvu(m, *map.alpha).w;
  return (lhs - rhs).cwiseAbs().maxCoeff() < kWeightTol;
}

}  // namespace mveff
