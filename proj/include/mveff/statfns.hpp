#pragma once

// Scalar densities and the central-t quantile used by the inference layer.
// Everything here is a pure function and safe to call from any thread.

namespace mveff::statfns {

/// Truncation control for the Poisson-mixture series of the non-central
/// densities. Summation stops once the accumulated Poisson weight exceeds
/// 1 - series_tol, the mode has been passed and the latest term is below
/// series_tol relative to the sum, or after max_terms.
struct DensityTolerance {
  double series_tol = 1e-12;
  int max_terms = 10000;
};

double norm_pdf(double x);
double norm_cdf(double x);

/// Chi-square density with n degrees of freedom; zero for x <= 0.
double chi2_pdf(double x, int n);

/// Central Student-t density. `p` may be non-integer (large-dof proxies).
double t_pdf(double x, double p);

/// Central F density with (n1, n2) degrees of freedom.
double f_pdf(double x, double n1, double n2);

/// Non-central F density as a Poisson(lambda/2) mixture of scaled central F
/// densities with (n1 + 2j, n2) degrees of freedom.
double noncentral_f_pdf(double x, int n1, int n2, double lambda,
                        const DensityTolerance& tol = {});

/// Non-central t density. Evaluated as the derivative of the
/// Poisson/beta mixture representation of the CDF; for opposite signs of
/// x and gamma the alternating terms can cancel, so the result is clamped
/// at zero.
double noncentral_t_pdf(double x, double p, double gamma,
                        const DensityTolerance& tol = {});

/// Central-t CDF by Gauss-Kronrod integration of t_pdf from 0.
double t_cdf(double x, double p);

/// Root of t_cdf(q, p) = prob. Bracket by doubling, then bisection with
/// Newton refinement.
double t_quantile(double prob, double p);

}  // namespace mveff::statfns
