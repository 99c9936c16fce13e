#pragma once

#include <optional>

#include "mveff/moments.hpp"
#include "mveff/solvers.hpp"

namespace mveff {

/// Maps a Markowitz target (or a quadratic-utility coefficient) onto the
/// mean-variance utility problem.
///
/// `alpha_inv` may be negative: the solution then sits on the lower branch of
/// the parabola and no utility slope reproduces it, so `alpha` is empty.
/// `alpha_inv == 0` maps to the infinite slope (the GMV portfolio) and counts
/// as efficient. `lambda` is the standardized distance of the target from
/// the GMV return, in units of sqrt(v_gmv).
struct EquivalenceResult {
  double alpha_inv = 0.0;
  std::optional<RiskSlope> alpha;
  double lambda = 0.0;
  bool efficient = false;
};

/// Markowitz target mu0 -> utility slope s / (mu0 - r_gmv).
/// Throws DegenerateFrontier if s <= 0 and mu0 != r_gmv.
EquivalenceResult map_m_to_mvu(const FrontierParams& f, double mu0);

/// Quadratic-utility coefficient -> utility slope
/// (1 + s) / (alpha_tilde^-1 - 1 - r_gmv).
EquivalenceResult map_qu_to_mvu(const FrontierParams& f, double alpha_tilde);

/// True iff the Markowitz weights at mu0 equal the utility weights at the
/// mapped slope to 1e-9 in max norm. Precondition: the mapping is efficient
/// (InvalidArgument otherwise).
bool verify_equivalence_m(const AssetMoments& m, double mu0);
bool verify_equivalence_qu(const AssetMoments& m, double alpha_tilde);

}  // namespace mveff
