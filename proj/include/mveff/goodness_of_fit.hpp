#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mveff/quadrature.hpp"

namespace mveff::gof {

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Kolmogorov limiting survival function Q(t) = 2 sum (-1)^{j-1} exp(-2 j^2 t^2).
double kolmogorov_survival(double t);

/// One-sample Kolmogorov-Smirnov test. `cdf_at` receives the sorted sample
/// and returns the hypothesized CDF at each point (same order), which lets
/// callers integrate a density incrementally between neighbours.
KsResult ks_test(std::vector<double> sample,
                 const std::function<std::vector<double>(std::span<const double>)>& cdf_at);

/// Convenience overload for a pointwise CDF.
KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf);

/// CDF values at ascending points by integrating `pdf` from `support_lo`
/// (may be -infinity) and accumulating interval by interval.
std::vector<double> integrate_cdf_at(const Integrand& pdf, double support_lo,
                                     std::span<const double> sorted_points,
                                     const QuadratureConfig& cfg = {});

/// CDF tabulated on a uniform grid over [lo, hi] by integrating `pdf`, then
/// evaluated by cubic Hermite interpolation using the pdf as the exact
/// derivative at the nodes. Meant for smooth densities that are expensive
/// to evaluate.
class TabulatedCdf {
 public:
  TabulatedCdf(const Integrand& pdf, double lo, double hi, int intervals,
               double mass_below_lo, const QuadratureConfig& cfg = {});

  double operator()(double x) const;
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  /// Tabulated CDF at hi (total mass captured up to the upper end).
  double total() const { return cdf_.back(); }

 private:
  double lo_;
  double hi_;
  double step_;
  std::vector<double> cdf_;
  std::vector<double> pdf_;
};

double pearson_correlation(std::span<const double> x, std::span<const double> y);

struct IndependenceResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Chi-square test of independence on a bins x bins table of rank
/// (equal-count) bins of x and y.
IndependenceResult chi2_independence(std::span<const double> x, std::span<const double> y,
                                     int bins);

/// Upper tail of the chi-square distribution by quadrature.
double chi2_survival(double x, int dof);

}  // namespace mveff::gof
