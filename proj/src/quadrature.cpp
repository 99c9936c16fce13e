#include "mveff/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "mveff/error.hpp"

namespace mveff::quad {

namespace {

// Kronrod abscissae; odd indices (1, 3, 5, 7) are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

double safe_eval(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw Error(ErrorCode::QuadratureFailure,
                "integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

}  // namespace

QuadratureResult gauss_kronrod15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = safe_eval(f, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = safe_eval(f, center - dx) + safe_eval(f, center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  const double err = std::abs(kronrod - gauss);
  return {kronrod, err, 1};
}

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0) || cfg.max_subdivisions < 1) {
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
  }
  if (a == b) return {};
  if (a > b) {
    auto r = integrate(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Segment> heap;
  const auto first = gauss_kronrod15(f, a, b);
  heap.push({a, b, first.value, first.abs_error});
  double total = first.value;
  double total_err = first.abs_error;
  int used = 1;

  auto converged = [&] {
    return total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
  };

  while (!converged()) {
    if (used >= cfg.max_subdivisions) {
      throw Error(ErrorCode::QuadratureFailure,
                  "adaptive quadrature did not converge on [" + std::to_string(a) +
                      ", " + std::to_string(b) + "]: error estimate " +
                      std::to_string(total_err));
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw Error(ErrorCode::QuadratureFailure,
                  "interval underflow in adaptive quadrature");
    }
    const auto left = gauss_kronrod15(f, worst.a, mid);
    const auto right = gauss_kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.abs_error + right.abs_error - worst.error;
    heap.push({worst.a, mid, left.value, left.abs_error});
    heap.push({mid, worst.b, right.value, right.abs_error});
    ++used;
  }

  // Re-sum to shed the drift of the running updates.
  double value = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {value, err, used};
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureConfig& cfg, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::InvalidArgument, "integration scale must be positive");
  }
  auto mapped = [&f, a, scale](double t) {
    const double one_minus = 1.0 - t;
    const double x = a + scale * t / one_minus;
    if (!std::isfinite(x)) return 0.0;
    const double y = f(x);
    if (y == 0.0) return 0.0;
    return scale * y / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0, 1.0, cfg);
}

QuadratureResult integrate_from_minus_infinity(const Integrand& f, double b,
                                               const QuadratureConfig& cfg, double scale) {
  auto mirrored = [&f, b](double v) { return f(b - v); };
  return integrate_to_infinity(mirrored, 0.0, cfg, scale);
}

}  // namespace mveff::quad
