#pragma once

#include <cstdint>
#include <vector>

#include "mveff/estimation.hpp"
#include "mveff/goodness_of_fit.hpp"
#include "mveff/inference.hpp"
#include "mveff/moments.hpp"
#include "mveff/rng.hpp"

namespace mveff {

/// Simulation setup: n i.i.d. N(mu, Sigma) return vectors per replication.
struct McConfig {
  int n = 0;
  int k = 0;
  long reps = 0;
  std::uint64_t seed = 0;
  AssetMoments truth;
};

/// Validates n > k >= 2, reps >= 1 and that k matches the truth.
McConfig make_mc_config(AssetMoments truth, int n, long reps, std::uint64_t seed);

/// Convenience: synthesizes the truth from frontier parameters first.
McConfig make_mc_config(const FrontierParams& f, int n, int k, long reps, std::uint64_t seed);

/// Proportion estimate with its binomial standard error.
struct McSummary {
  double estimate = 0.0;
  double std_error = 0.0;
  long reps = 0;
};

/// Builds (mu, Sigma) with the requested frontier parameters:
/// Sigma = k v_gmv I and mu = r_gmv 1 + d with d orthogonal to 1 and
/// d'Qd = s. The direction of d is drawn from `seed`.
AssetMoments synthesize_moments(const FrontierParams& f, int k, std::uint64_t seed);

/// n rows of N(mu, Sigma) draws through the Cholesky factor.
ReturnSample simulate_sample(const AssetMoments& m, int n, SplitMix64& rng);

/// Frontier estimates for every replication, indexed by replication number.
/// Both execution paths produce identical results; the parallel one spreads
/// replications over OpenMP threads. Throws NotPositiveDefinite if any
/// replication yields a singular sample covariance.
std::vector<EstimatedFrontier> run_replications(const McConfig& cfg,
                                                Execution exec = Execution::Parallel);

McSummary empirical_prob_inefficient_m(const McConfig& cfg, double mu0,
                                       Execution exec = Execution::Parallel);
McSummary empirical_prob_inefficient_qu(const McConfig& cfg, double alpha_tilde,
                                        Execution exec = Execution::Parallel);

/// Rejection frequency of the Markowitz efficiency test at level beta.
McSummary empirical_power(const McConfig& cfg, double mu0, double beta,
                          Execution exec = Execution::Parallel);

/// Simulated T1 statistics, one per replication.
std::vector<double> simulate_t1(const McConfig& cfg, double mu0,
                                Execution exec = Execution::Parallel);

/// Goodness-of-fit diagnostics of the finite-sample laws of the frontier
/// estimators against the truth in `cfg`.
struct SamplingLawReport {
  gof::KsResult variance_pivot;  // (n-1) v_hat / v_gmv  vs chi2(n-k)
  gof::KsResult slope_pivot;     // c0 s_hat             vs F(k-1, n-k+1; n s)
  gof::KsResult return_pivot;    // standardized r_hat   vs N(0, 1)
  double corr_v_r = 0.0;
  double corr_v_s = 0.0;
  gof::IndependenceResult v_r_independence;  // 4 x 4 rank bins
  long reps = 0;
};

SamplingLawReport sampling_law_checks(const McConfig& cfg,
                                       Execution exec = Execution::Parallel);

}  // namespace mveff
