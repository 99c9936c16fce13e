#include "mveff/statfns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mveff/error.hpp"
#include "mveff/quadrature.hpp"

namespace mveff::statfns {

namespace {

constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
constexpr double kLn2 = std::numbers::ln2;

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

void require_dof(double p, const char* who) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(who) + ": degrees of freedom must be >= 1");
  }
}

void require_tolerance(const DensityTolerance& tol) {
  if (!(tol.series_tol > 0.0) || tol.max_terms < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "density tolerance needs series_tol > 0 and max_terms >= 1");
  }
}

// Log of the central F density at x > 0.
double log_f_pdf(double x, double n1, double n2) {
  return 0.5 * n1 * std::log(n1) + 0.5 * n2 * std::log(n2) +
         (0.5 * n1 - 1.0) * std::log(x) -
         0.5 * (n1 + n2) * std::log(n2 + n1 * x) - log_beta(0.5 * n1, 0.5 * n2);
}

// Non-central t density for t > 0 and gamma < 0 from the Hermite-type form
//   C(t) * int_0^inf y^p exp(-(y - m)^2 / 2) dy,  m = g t / sqrt(p + t^2),
// whose integrand is positive. The integrand is scaled by its peak.
double noncentral_t_pdf_hermite(double t, double p, double gamma) {
  const double t2p = t * t + p;
  const double m = gamma * t / std::sqrt(t2p);
  const double peak = 0.5 * (m + std::sqrt(m * m + 4.0 * p));
  const double log_peak = p * std::log(peak) - 0.5 * (peak - m) * (peak - m);
  const auto g = [&](double y) {
    if (y <= 0.0) return 0.0;
    return std::exp(p * std::log(y) - 0.5 * (y - m) * (y - m) - log_peak);
  };
  const QuadratureConfig cfg{1e-300, 1e-13, 4000, 1e-12};
  // The log-integrand has curvature at least 1, so 40 units off the peak
  // it has dropped by more than e^-800.
  const double integral = quad::integrate(g, std::max(0.0, peak - 40.0), peak, cfg).value +
                          quad::integrate(g, peak, peak + 40.0, cfg).value;
  const double log_c = 0.5 * p * std::log(p) - 0.5 * p * gamma * gamma / t2p -
                       0.5 * std::log(std::numbers::pi) - std::lgamma(0.5 * p) -
                       0.5 * (p - 1.0) * kLn2 - 0.5 * (p + 1.0) * std::log(t2p);
  return std::exp(log_c + log_peak) * integral;
}

// Non-central t density for t > 0 (any sign of gamma). Differentiates
//   F(t) = Phi(-g) + 1/2 sum_j [P_j I_x(j+1/2, p/2) + Q_j I_x(j+1, p/2)],
// x = t^2 / (t^2 + p), term by term. Summation starts at the Poisson mode
// and walks outwards.
double noncentral_t_pdf_positive(double t, double p, double gamma,
                                 const DensityTolerance& tol) {
  const double t2p = t * t + p;
  const double log_x = 2.0 * std::log(t) - std::log(t2p);
  const double log_1mx = std::log(p) - std::log(t2p);
  // log(dx/dt) / 2 merged with the leading 1/2 of the mixture
  const double log_jac = std::log(t) + std::log(p) - 2.0 * std::log(t2p);
  const double half_b = 0.5 * p;

  const double h = 0.5 * gamma * gamma;
  const double log_h = h > 0.0 ? std::log(h) : -std::numeric_limits<double>::infinity();
  const double abs_gamma = std::abs(gamma);
  const double q_sign = gamma < 0.0 ? -1.0 : 1.0;

  // Log of the j-th P-weight, Q-weight magnitude and the two beta densities.
  auto log_p_weight = [&](double j) {
    return j == 0.0 ? -h : -h + j * log_h - std::lgamma(j + 1.0);
  };
  auto log_q_weight = [&](double j) {
    if (abs_gamma == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(abs_gamma) - h + (j == 0.0 ? 0.0 : j * log_h) - 0.5 * kLn2 -
           std::lgamma(j + 1.5);
  };
  auto log_beta_pdf = [&](double a) {
    return (a - 1.0) * log_x + (half_b - 1.0) * log_1mx - log_beta(a, half_b);
  };

  const double mode = std::floor(h);
  double sum = 0.0;
  double abs_sum = 0.0;
  double covered = 0.0;

  auto add_term = [&](double j, double lpw, double lqw) {
    const double tp = std::exp(lpw + log_beta_pdf(j + 0.5) + log_jac);
    const double tq = q_sign * std::exp(lqw + log_beta_pdf(j + 1.0) + log_jac);
    sum += tp + tq;
    abs_sum += tp + std::abs(tq);
    covered += std::exp(lpw);
    return tp + std::abs(tq);
  };

  int terms = 0;
  // Below the mode every term is kept: near t = 0 the low-order beta
  // densities grow like x^(j - 1/2) and outweigh their small Poisson weights.
  for (double j = mode - 1.0; j >= 0.0 && terms < tol.max_terms; j -= 1.0, ++terms) {
    add_term(j, log_p_weight(j), log_q_weight(j));
  }
  // From the mode upwards until the Poisson mass is covered and the terms
  // themselves have become negligible.
  double prev = std::numeric_limits<double>::infinity();
  for (double j = mode; terms < tol.max_terms; j += 1.0, ++terms) {
    const double term = add_term(j, log_p_weight(j), log_q_weight(j));
    const bool shrinking = term <= prev;
    prev = term;
    if (j < h || !shrinking) continue;
    if (covered >= 1.0 - tol.series_tol && term <= tol.series_tol * abs_sum) break;
    if (term == 0.0 || term < 1e-3 * tol.series_tol * abs_sum) break;
  }
  // Opposite signs of t and gamma make the Q terms alternate against the P
  // terms; when most of the magnitude cancels, use the positive integral.
  if (gamma < 0.0 && sum < 1e-4 * abs_sum) return noncentral_t_pdf_hermite(t, p, gamma);
  return std::max(0.0, sum);
}

}  // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double chi2_pdf(double x, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "chi2_pdf: n must be >= 1");
  if (!(x > 0.0)) return 0.0;
  const double k = 0.5 * n;
  return std::exp((k - 1.0) * std::log(x) - 0.5 * x - k * kLn2 - std::lgamma(k));
}

double t_pdf(double x, double p) {
  require_dof(p, "t_pdf");
  const double log_norm =
      std::lgamma(0.5 * (p + 1.0)) - std::lgamma(0.5 * p) - 0.5 * std::log(p * std::numbers::pi);
  return std::exp(log_norm - 0.5 * (p + 1.0) * std::log1p(x * x / p));
}

double f_pdf(double x, double n1, double n2) {
  if (!(n1 > 0.0) || !(n2 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "f_pdf: degrees of freedom must be positive");
  }
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (n1 > 2.0) return 0.0;
    if (n1 == 2.0) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(log_f_pdf(x, n1, n2));
}

double noncentral_f_pdf(double x, int n1, int n2, double lambda,
                        const DensityTolerance& tol) {
  if (n1 < 1 || n2 < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "noncentral_f_pdf: degrees of freedom must be >= 1");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidArgument,
                "noncentral_f_pdf: noncentrality must be finite and >= 0");
  }
  require_tolerance(tol);
  if (x < 0.0) return 0.0;
  if (lambda == 0.0) return f_pdf(x, n1, n2);

  // X = ((n1 + 2J) / n1) F_{n1+2J, n2}, J ~ Poisson(lambda / 2).
  const double h = 0.5 * lambda;
  const double log_h = std::log(h);
  double sum = 0.0;
  double covered = 0.0;
  double log_w = -h;
  for (int j = 0; j < tol.max_terms; ++j) {
    if (j > 0) log_w += log_h - std::log(static_cast<double>(j));
    const double w = std::exp(log_w);
    const double d1 = n1 + 2.0 * j;
    const double scale = n1 / d1;
    const double term = w * scale * f_pdf(scale * x, d1, n2);
    sum += term;
    covered += w;
    // In the right tail late terms outweigh their Poisson weight, so the
    // terms themselves must also be negligible.
    if (j >= h && covered >= 1.0 - tol.series_tol && term <= tol.series_tol * sum) break;
  }
  return sum;
}

double noncentral_t_pdf(double x, double p, double gamma,
                        const DensityTolerance& tol) {
  require_dof(p, "noncentral_t_pdf");
  require_tolerance(tol);
  if (!std::isfinite(gamma)) {
    throw Error(ErrorCode::InvalidArgument, "noncentral_t_pdf: gamma must be finite");
  }
  if (gamma == 0.0) return t_pdf(x, p);
  if (x == 0.0) return std::exp(-0.5 * gamma * gamma) * t_pdf(0.0, p);
  if (x > 0.0) return noncentral_t_pdf_positive(x, p, gamma, tol);
  return noncentral_t_pdf_positive(-x, p, -gamma, tol);
}

double t_cdf(double x, double p) {
  require_dof(p, "t_cdf");
  if (x == 0.0) return 0.5;
  const QuadratureConfig cfg{1e-15, 1e-13, 4000, 1e-12};
  auto pdf = [p](double u) { return t_pdf(u, p); };
  const double a = std::abs(x);
  double upper_tail = 0.0;
  if (a <= 1.0) {
    upper_tail = 0.5 - quad::integrate(pdf, 0.0, a, cfg).value;
  } else {
    upper_tail = quad::integrate_to_infinity(pdf, a, cfg).value;
  }
  upper_tail = std::clamp(upper_tail, 0.0, 1.0);
  return x > 0.0 ? 1.0 - upper_tail : upper_tail;
}

double t_quantile(double prob, double p) {
  if (!(prob > 0.0 && prob < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "t_quantile: prob must lie in (0, 1)");
  }
  require_dof(p, "t_quantile");
  if (prob == 0.5) return 0.0;
  // Solve on the positive half-line and reflect.
  const double target = prob > 0.5 ? prob : 1.0 - prob;

  double lo = 0.0;
  double hi = 1.0;
  while (t_cdf(hi, p) < target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) {
      throw Error(ErrorCode::QuadratureFailure, "t_quantile: bracket search diverged");
    }
  }

  double q = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double g = t_cdf(q, p) - target;
    if (g == 0.0) break;
    if (g < 0.0) lo = q; else hi = q;
    double next = q - g / t_pdf(q, p);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - q);
    q = next;
    if (step <= 1e-14 * std::max(1.0, q) || hi - lo <= 1e-14 * std::max(1.0, q)) break;
  }
  return prob > 0.5 ? q : -q;
}

}  // namespace mveff::statfns
