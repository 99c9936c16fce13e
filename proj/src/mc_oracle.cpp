#include "mveff/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mveff/error.hpp"
#include "mveff/statfns.hpp"

namespace mveff {

namespace {

McSummary proportion(long hits, long reps) {
  const double p = static_cast<double>(hits) / static_cast<double>(reps);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(reps)), reps};
}

// Per-replication kernel. Returns false when the sample covariance is
// singular.
bool replicate(const McConfig& cfg, long rep, EstimatedFrontier& out) {
  SplitMix64 rng = replication_stream(cfg.seed, static_cast<std::uint64_t>(rep));
  try {
    out = estimate_frontier(simulate_sample(cfg.truth, cfg.n, rng));
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPositiveDefinite) return false;
    throw;
  }
}

}  // namespace

McConfig make_mc_config(AssetMoments truth, int n, long reps, std::uint64_t seed) {
  const int k = truth.k();
  if (n <= k) throw Error(ErrorCode::SampleTooSmall, "Monte Carlo needs n > k");
  if (reps < 1) throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs reps >= 1");
  return McConfig{n, k, reps, seed, std::move(truth)};
}

McConfig make_mc_config(const FrontierParams& f, int n, int k, long reps, std::uint64_t seed) {
  return make_mc_config(synthesize_moments(f, k, seed), n, reps, seed);
}

AssetMoments synthesize_moments(const FrontierParams& f, int k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "synthesize_moments needs k >= 2");
  const FrontierParams checked = make_frontier_params(f.r_gmv, f.v_gmv, f.s);

  const MatrixXd sigma = (k * checked.v_gmv) * MatrixXd::Identity(k, k);
  VectorXd mu = VectorXd::Constant(k, checked.r_gmv);
  if (checked.s > 0.0) {
    SplitMix64 rng(SplitMix64::mix(seed ^ 0xD1B54A32D192ED03ULL));
    std::normal_distribution<double> normal;
    VectorXd d(k);
    double norm = 0.0;
    // Redraw on the (measure-zero) event of a direction parallel to 1.
    while (norm < 1e-8) {
      for (int i = 0; i < k; ++i) d(i) = normal(rng);
      d.array() -= d.mean();
      norm = d.norm();
    }
    // With Sigma = k v I, d'Qd = |d|^2 / (k v) for d orthogonal to 1.
    mu += d * (std::sqrt(checked.s * k * checked.v_gmv) / norm);
  }
  return validate_moments(mu, sigma);
}

ReturnSample simulate_sample(const AssetMoments& m, int n, SplitMix64& rng) {
  const int k = m.k();
  std::normal_distribution<double> normal;
  MatrixXd z(n, k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) z(i, j) = normal(rng);
  }
  const MatrixXd l = m.cholesky().matrixL();
  MatrixXd x = z * l.transpose();
  x.rowwise() += m.mu().transpose();
  return ReturnSample(std::move(x));
}

std::vector<EstimatedFrontier> run_replications(const McConfig& cfg, Execution exec) {
  std::vector<EstimatedFrontier> out(static_cast<std::size_t>(cfg.reps));
  long singular = 0;
  if (exec == Execution::Serial) {
    for (long r = 0; r < cfg.reps; ++r) {
      if (!replicate(cfg, r, out[r])) ++singular;
    }
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(static) reduction(+ : singular)
    for (long r = 0; r < cfg.reps; ++r) {
      try {
        if (!replicate(cfg, r, out[r])) ++singular;
      } catch (...) {
#pragma omp critical(mveff_mc_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  if (singular > 0) {
    throw Error(ErrorCode::NotPositiveDefinite,
                std::to_string(singular) + " replication(s) produced a singular sample covariance");
  }
  return out;
}

McSummary empirical_prob_inefficient_m(const McConfig& cfg, double mu0, Execution exec) {
  const auto reps = run_replications(cfg, exec);
  // alpha1_inv_hat < 0 exactly when mu0 < r_hat (s_hat > 0 almost surely).
  const long hits = std::count_if(reps.begin(), reps.end(), [mu0](const EstimatedFrontier& ef) {
    return estimated_alpha_inverses(ef, mu0, 1.0).alpha1_inv < 0.0;
  });
  return proportion(hits, cfg.reps);
}

McSummary empirical_prob_inefficient_qu(const McConfig& cfg, double alpha_tilde,
                                        Execution exec) {
  const auto reps = run_replications(cfg, exec);
  const long hits =
      std::count_if(reps.begin(), reps.end(), [alpha_tilde](const EstimatedFrontier& ef) {
        return estimated_alpha_inverses(ef, ef.r_hat, alpha_tilde).alpha3_inv < 0.0;
      });
  return proportion(hits, cfg.reps);
}

McSummary empirical_power(const McConfig& cfg, double mu0, double beta, Execution exec) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "significance level must lie in (0, 1)");
  }
  const double crit = -statfns::t_quantile(1.0 - beta, cfg.n - cfg.k);
  const auto reps = run_replications(cfg, exec);
  const long hits = std::count_if(reps.begin(), reps.end(), [&](const EstimatedFrontier& ef) {
    return t1_statistic(ef, mu0) < crit;
  });
  return proportion(hits, cfg.reps);
}

std::vector<double> simulate_t1(const McConfig& cfg, double mu0, Execution exec) {
  const auto reps = run_replications(cfg, exec);
  std::vector<double> out(reps.size());
  std::transform(reps.begin(), reps.end(), out.begin(),
                 [mu0](const EstimatedFrontier& ef) { return t1_statistic(ef, mu0); });
  return out;
}

SamplingLawReport sampling_law_checks(const McConfig& cfg, Execution exec) {
  const FrontierParams truth = frontier_params(cfg.truth);
  const auto reps = run_replications(cfg, exec);
  const double n = cfg.n;
  const int k = cfg.k;
  const double c0 = n * (n - k + 1) / ((n - 1.0) * (k - 1));

  std::vector<double> v_pivot, s_pivot, r_pivot, v_hat, r_hat, s_hat;
  for (const auto& ef : reps) {
    v_pivot.push_back((n - 1.0) * ef.v_hat / truth.v_gmv);
    s_pivot.push_back(c0 * ef.s_hat);
    r_pivot.push_back((ef.r_hat - truth.r_gmv) /
                      std::sqrt((1.0 + n / (n - 1.0) * ef.s_hat) * truth.v_gmv / n));
    v_hat.push_back(ef.v_hat);
    r_hat.push_back(ef.r_hat);
    s_hat.push_back(ef.s_hat);
  }

  const QuadratureConfig cfg_q{1e-12, 1e-10, 2000, 1e-12};
  const int chi_dof = cfg.n - cfg.k;
  const int df1 = k - 1;
  const int df2 = cfg.n - k + 1;
  const double ncp = n * truth.s;

  SamplingLawReport report;
  report.reps = cfg.reps;
  report.variance_pivot = gof::ks_test(v_pivot, [&](std::span<const double> xs) {
    return gof::integrate_cdf_at([&](double x) { return statfns::chi2_pdf(x, chi_dof); }, 0.0,
                                 xs, cfg_q);
  });
  report.slope_pivot = gof::ks_test(s_pivot, [&](std::span<const double> xs) {
    return gof::integrate_cdf_at(
        [&](double x) { return statfns::noncentral_f_pdf(x, df1, df2, ncp); }, 0.0, xs, cfg_q);
  });
  report.return_pivot = gof::ks_test(r_pivot, [](double x) { return statfns::norm_cdf(x); });
  report.corr_v_r = gof::pearson_correlation(v_hat, r_hat);
  report.corr_v_s = gof::pearson_correlation(v_hat, s_hat);
  report.v_r_independence = gof::chi2_independence(v_hat, r_hat, 4);
  return report;
}

}  // namespace mveff
