#pragma once

#include <functional>

namespace mveff {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
  // Tail-mass tolerance used when a semi-infinite range has to be cut.
  double upper_cut = 1e-12;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

namespace quad {

/// One 15-point Kronrod pass with the embedded 7-point Gauss error estimate.
QuadratureResult gauss_kronrod15(const Integrand& f, double a, double b);

/// Globally adaptive bisection on [a, b]: always split the interval with the
/// largest error estimate until the total estimate meets
/// max(abs_tol, rel_tol * |value|). Throws QuadratureFailure if the
/// subdivision budget runs out first.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg = {});

/// Integral over [a, inf) via x = a + scale * t / (1 - t), t in [0, 1).
/// `scale` should roughly match the width of the integrand's bulk.
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureConfig& cfg = {},
                                       double scale = 1.0);

/// Integral over (-inf, b] via the mirrored substitution.
QuadratureResult integrate_from_minus_infinity(const Integrand& f, double b,
                                               const QuadratureConfig& cfg = {},
                                               double scale = 1.0);

}  // namespace quad
}  // namespace mveff
