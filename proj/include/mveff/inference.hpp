#pragma once

#include <span>
#include <vector>

#include "mveff/estimation.hpp"
#include "mveff/moments.hpp"
#include "mveff/quadrature.hpp"

namespace mveff {

/// Sample-size pair for the finite-sample laws; requires n > k >= 2.
struct SampleShape {
  int n = 0;
  int k = 0;
};

/// Standardized distance (mu0 - r_gmv) / sqrt(v_gmv) of a Markowitz target.
double lambda_m(const FrontierParams& f, double mu0);
/// Same for a quadratic-utility coefficient, with mu0 replaced by
/// alpha_tilde^-1 - 1.
double lambda_qu(const FrontierParams& f, double alpha_tilde);

/// P(estimated utility-slope inverse < 0) as a function of the standardized
/// distance lambda, slope s and sample shape:
///   int_0^inf [1 - Phi(lambda / sqrt(1/n + y/(n-1)))] dF(y),
/// F the law of s_hat (a scaled non-central F with (k-1, n-k+1) dof and
/// noncentrality n s).
double prob_inefficient(double lambda, double s, SampleShape shape,
                        const QuadratureConfig& q = {});

double prob_inefficient_m(const FrontierParams& f, SampleShape shape, double mu0,
                          const QuadratureConfig& q = {});
double prob_inefficient_qu(const FrontierParams& f, SampleShape shape, double alpha_tilde,
                           const QuadratureConfig& q = {});

/// Outcome of the one-sided efficiency test. The statistic is t(n-k) at the
/// null boundary; efficiency is accepted (null rejected) when
/// statistic < critical_value = -t_{n-k; 1-beta}. The p-value is the central
/// t CDF at the statistic.
struct TestResult {
  double statistic = 0.0;
  double critical_value = 0.0;
  double p_value = 0.0;
  bool accept_efficiency = false;
  double beta = 0.0;
};

/// T1 = sqrt(n / v_hat) sqrt((n-k)/(n-1)) (r_hat - mu0) / sqrt(1 + n/(n-1) s_hat).
double t1_statistic(const EstimatedFrontier& ef, double mu0);

TestResult test_m_efficiency(const EstimatedFrontier& ef, double mu0, double beta);
/// Same pivot with mu0 replaced by alpha_tilde^-1 - 1.
TestResult test_qu_efficiency(const EstimatedFrontier& ef, double alpha_tilde, double beta);

/// Smallest target mu0 whose Markowitz solution is accepted as efficient.
double m_acceptance_threshold(const EstimatedFrontier& ef, double beta);
/// Largest alpha_tilde whose quadratic-utility solution is accepted.
double qu_acceptance_threshold(const EstimatedFrontier& ef, double beta);

/// Exact density of T1 under the true parameters: a mixture over s_hat of
/// non-central t(n-k) densities. The noncentrality given s_hat = y is
///   sqrt(n) (r_gmv - mu0) / sqrt(v_gmv) / sqrt(1 + n/(n-1) y),
/// whose sign follows from the orientation of T1 (r_hat - mu0).
double density_t1(double x, const FrontierParams& f, SampleShape shape, double mu0,
                  const QuadratureConfig& q = {});

/// Rejection probability P(T1 < -t_{n-k;1-beta}) under the true parameters,
/// computed as a double integral over (s_hat, v_hat) of a normal CDF.
double power_m_test(const FrontierParams& f, SampleShape shape, double mu0, double beta,
                    const QuadratureConfig& q = {});

/// Power expressed through the standardized distance lambda = (mu0 - r_gmv)/sqrt(v_gmv);
/// it depends on the parameters only through (lambda, s).
double power_at_lambda(double lambda, double s, SampleShape shape, double beta,
                       const QuadratureConfig& q = {});

enum class Execution { Serial, Parallel };

/// prob_inefficient over a lambda grid. The parallel path distributes grid
/// points over OpenMP threads; output order and values match the serial path.
std::vector<double> prob_inefficient_curve(std::span<const double> lambdas, double s,
                                           SampleShape shape, const QuadratureConfig& q = {},
                                           Execution exec = Execution::Parallel);

std::vector<double> power_curve(std::span<const double> lambdas, double s, SampleShape shape,
                                double beta, const QuadratureConfig& q = {},
                                Execution exec = Execution::Parallel);

}  // namespace mveff
