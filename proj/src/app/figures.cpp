#include "mveff/app/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mveff/app/procedure.hpp"
#include "mveff/error.hpp"
#include "mveff/inference.hpp"
#include "mveff/solvers.hpp"

namespace mveff::app {

namespace {

template <class T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? fallback : given;
}

void add(FigureData& d, const MeanVariancePoint& p, const std::string& series) {
  d.points.push_back({p.variance, p.expected_return, series});
}

/// Both parabola branches sampled from the vertex out to variance v_max.
void add_parabola(FigureData& d, const FrontierParams& f, double v_max, const std::string& panel) {
  constexpr int kSamples = 200;
  for (int i = 0; i <= kSamples; ++i) {
    // Quadratic spacing concentrates samples near the vertex.
    const double t = static_cast<double>(i) / kSamples;
    const double v = f.v_gmv + (v_max - f.v_gmv) * t * t;
    d.points.push_back({v, frontier_point(f, v, Branch::Upper), panel + "frontier_upper"});
  }
  for (int i = 0; i <= kSamples; ++i) {
    const double t = static_cast<double>(i) / kSamples;
    const double v = f.v_gmv + (v_max - f.v_gmv) * t * t;
    d.points.push_back({v, frontier_point(f, v, Branch::Lower), panel + "frontier_lower"});
  }
}

double max_variance(const FigureData& d, std::size_t from) {
  double v = 0.0;
  for (std::size_t i = from; i < d.points.size(); ++i) v = std::max(v, d.points[i].x);
  return v;
}

FigureData figure1(const FigureOptions& o) {
  const FrontierParams f = o.has_frontier ? o.frontier : illustration_frontier();
  FigureData d{1, "variance", "expected_return", {}};

  std::size_t start = d.points.size();
  for (double mu0 : or_default(o.mu0_grid, linear_grid(0.0005, 0.06, 0.0005))) {
    add(d, markowitz_point(f, mu0), "a:m");
  }
  for (double ai : or_default(o.alpha_inv_grid, linear_grid(0.0, 0.184, 0.002))) {
    add(d, mvu_point(f, ai > 0.0 ? RiskSlope::finite(1.0 / ai) : RiskSlope::infinite()), "a:mvu");
  }
  add_parabola(d, f, max_variance(d, start), "a:");

  start = d.points.size();
  for (double at : or_default(o.alpha_tilde_grid, linear_grid(0.80, 1.30, 0.005))) {
    add(d, qu_point(f, at), "b:qu");
  }
  for (double ai : or_default(o.alpha_inv_grid, linear_grid(0.0, 0.184, 0.002))) {
    add(d, mvu_point(f, ai > 0.0 ? RiskSlope::finite(1.0 / ai) : RiskSlope::infinite()), "b:mvu");
  }
  add_parabola(d, f, max_variance(d, start), "b:");
  return d;
}

std::string s_label(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "s=%g", s);
  return buf;
}

FigureData figure2(const FigureOptions& o) {
  FigureData d{2, "lambda", "prob_inefficient", {}};
  const std::vector<double> lambdas = or_default(o.lambda_grid, linear_grid(-0.5, 0.5, 0.025));
  for (double s : or_default(o.s_values, {0.05, 0.25, 1.25})) {
    const std::vector<double> p = prob_inefficient_curve(lambdas, s, {o.n, o.k});
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      d.points.push_back({lambdas[i], p[i], s_label(s)});
    }
  }
  return d;
}

FigureData figure3(const FigureOptions& o) {
  FigureData d{3, "neg_lambda", "power", {}};
  const std::vector<double> axis = or_default(o.lambda_grid, linear_grid(-1.0, 1.0, 0.05));
  std::vector<double> lambdas(axis.size());
  std::transform(axis.begin(), axis.end(), lambdas.begin(), [](double x) { return -x; });
  for (double s : or_default(o.s_values, {0.05, 0.25, 1.25})) {
    const std::vector<double> p = power_curve(lambdas, s, {o.n, o.k}, o.beta);
    for (std::size_t i = 0; i < axis.size(); ++i) {
      d.points.push_back({axis[i], p[i], s_label(s)});
    }
  }
  return d;
}

FigureData figure4(const FigureOptions& o) {
  const FrontierParams f = o.has_frontier ? o.frontier : estimated_illustration_frontier();
  const EstimatedFrontier ef = make_estimated_frontier(f.r_gmv, f.v_gmv, f.s, o.n, o.k);
  const ProcedureReport report = run_efficiency_procedure(
      ef, or_default(o.mu0_grid, linear_grid(0.0, 0.05, 0.0005)),
      or_default(o.alpha_tilde_grid, linear_grid(0.90, 1.10, 0.001)), o.beta);

  FigureData d{4, "variance", "expected_return", {}};
  for (const ProcedureRow& r : report.m_rows) {
    add(d, r.point, r.test.accept_efficiency ? "a:accepted" : "a:not_rejected");
  }
  add_parabola(d, f, max_variance(d, 0), "a:");
  const std::size_t start = d.points.size();
  for (const ProcedureRow& r : report.qu_rows) {
    add(d, r.point, r.test.accept_efficiency ? "b:accepted" : "b:not_rejected");
  }
  add_parabola(d, f, max_variance(d, start), "b:");
  return d;
}

}  // namespace

FrontierParams illustration_frontier() { return make_frontier_params(0.014, 0.0011, 0.25); }

FrontierParams estimated_illustration_frontier() {
  return make_frontier_params(0.0145664, 0.0010337, 0.221457);
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(hi - lo)) {
    throw Error(ErrorCode::InvalidArgument, "grid needs lo <= hi and a positive step");
  }
  const long count = std::lround((hi - lo) / step) + 1;
  if (count > 1000000) throw Error(ErrorCode::InvalidArgument, "grid has too many points");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = lo + static_cast<double>(i) * step;
  return grid;
}

FigureData emit_figure_data(const FigureOptions& options) {
  switch (options.figure) {
    case 1: return figure1(options);
    case 2: return figure2(options);
    case 3: return figure3(options);
    case 4: return figure4(options);
    default: throw Error(ErrorCode::InvalidArgument, "figure must be 1, 2, 3 or 4");
  }
}

}  // namespace mveff::app
