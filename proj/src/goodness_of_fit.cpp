#include "mveff/goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "mveff/error.hpp"
#include "mveff/statfns.hpp"

namespace mveff::gof {

double kolmogorov_survival(double t) {
  if (!(t > 0.0)) return 1.0;
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  if (t < 1.18) {
    // Theta-function form converges fast for small t.
    const double w = std::sqrt(2.0 * std::numbers::pi) / t;
    double cdf = 0.0;
    for (int j = 1; j <= 6; ++j) {
      const double odd = 2.0 * j - 1.0;
      cdf += std::exp(-odd * odd * pi2 / (8.0 * t * t));
    }
    return std::clamp(1.0 - w * cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * t * t);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> sample,
                 const std::function<std::vector<double>(std::span<const double>)>& cdf_at) {
  if (sample.empty()) throw Error(ErrorCode::InvalidArgument, "KS test on an empty sample");
  std::sort(sample.begin(), sample.end());
  const std::vector<double> f = cdf_at(sample);
  if (f.size() != sample.size()) {
    throw Error(ErrorCode::DimensionMismatch, "CDF evaluation returned the wrong length");
  }
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double fi = std::clamp(f[i], 0.0, 1.0);
    d = std::max({d, (i + 1) / n - fi, fi - i / n});
  }
  const double en = std::sqrt(n);
  return {d, kolmogorov_survival((en + 0.12 + 0.11 / en) * d)};
}

KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf) {
  return ks_test(std::move(sample), [&cdf](std::span<const double> xs) {
    std::vector<double> out(xs.size());
    std::transform(xs.begin(), xs.end(), out.begin(), cdf);
    return out;
  });
}

std::vector<double> integrate_cdf_at(const Integrand& pdf, double support_lo,
                                     std::span<const double> sorted_points,
                                     const QuadratureConfig& cfg) {
  std::vector<double> out(sorted_points.size());
  if (sorted_points.empty()) return out;
  double acc = 0.0;
  double prev = support_lo;
  for (std::size_t i = 0; i < sorted_points.size(); ++i) {
    const double x = sorted_points[i];
    if (i > 0 && x < sorted_points[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "points must be ascending");
    }
    if (x < prev) {
      out[i] = 0.0;  // below the support
      continue;
    }
    if (std::isinf(prev)) {
      acc = quad::integrate_from_minus_infinity(pdf, x, cfg).value;
    } else if (x > prev) {
      acc += quad::integrate(pdf, prev, x, cfg).value;
    }
    prev = x;
    out[i] = acc;
  }
  return out;
}

TabulatedCdf::TabulatedCdf(const Integrand& pdf, double lo, double hi, int intervals,
                           double mass_below_lo, const QuadratureConfig& cfg)
    : lo_(lo), hi_(hi), step_((hi - lo) / intervals) {
  if (!(hi > lo) || intervals < 1) {
    throw Error(ErrorCode::InvalidArgument, "tabulated CDF needs lo < hi and intervals >= 1");
  }
  cdf_.resize(intervals + 1);
  pdf_.resize(intervals + 1);
  cdf_[0] = mass_below_lo;
  pdf_[0] = pdf(lo);
  for (int i = 0; i < intervals; ++i) {
    const double a = lo + i * step_;
    const double b = (i + 1 == intervals) ? hi : a + step_;
    cdf_[i + 1] = cdf_[i] + quad::integrate(pdf, a, b, cfg).value;
    pdf_[i + 1] = pdf(b);
  }
}

double TabulatedCdf::operator()(double x) const {
  if (x <= lo_) return cdf_.front();
  if (x >= hi_) return cdf_.back();
  const double pos = (x - lo_) / step_;
  const auto i = std::min(static_cast<std::size_t>(pos), cdf_.size() - 2);
  const double t = pos - static_cast<double>(i);
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * cdf_[i] + h10 * step_ * pdf_[i] + h01 * cdf_[i + 1] + h11 * step_ * pdf_[i + 1];
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "correlation needs two equal-length samples");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

namespace {

std::vector<int> rank_bins(std::span<const double> v, int bins) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<int> bin(v.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    bin[order[r]] = static_cast<int>(r * bins / order.size());
  }
  return bin;
}

}  // namespace

IndependenceResult chi2_independence(std::span<const double> x, std::span<const double> y,
                                     int bins) {
  if (x.size() != y.size() || bins < 2 || x.size() < static_cast<std::size_t>(bins * bins)) {
    throw Error(ErrorCode::InvalidArgument, "independence test needs matched samples and bins >= 2");
  }
  const auto bx = rank_bins(x, bins);
  const auto by = rank_bins(y, bins);
  std::vector<double> table(bins * bins, 0.0), rows(bins, 0.0), cols(bins, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    table[bx[i] * bins + by[i]] += 1.0;
    rows[bx[i]] += 1.0;
    cols[by[i]] += 1.0;
  }
  const double n = static_cast<double>(x.size());
  double stat = 0.0;
  for (int i = 0; i < bins; ++i) {
    for (int j = 0; j < bins; ++j) {
      const double expected = rows[i] * cols[j] / n;
      const double diff = table[i * bins + j] - expected;
      stat += diff * diff / expected;
    }
  }
  const int dof = (bins - 1) * (bins - 1);
  return {stat, dof, chi2_survival(stat, dof)};
}

double chi2_survival(double x, int dof) {
  if (!(x > 0.0)) return 1.0;
  const QuadratureConfig cfg{1e-14, 1e-12, 2000, 1e-12};
  auto pdf = [dof](double u) { return statfns::chi2_pdf(u, dof); };
  return std::clamp(quad::integrate_to_infinity(pdf, x, cfg, dof).value, 0.0, 1.0);
}

}  // namespace mveff::gof
