#pragma once

#include <string>
#include <vector>

#include "mveff/moments.hpp"

namespace mveff::app {

/// One plotted point; `series` is prefixed with the panel letter for the
/// two-panel figures ("a:m", "b:qu", ...).
struct FigurePoint {
  double x = 0.0;
  double y = 0.0;
  std::string series;
};

struct FigureData {
  int figure = 0;
  std::string x_label;
  std::string y_label;
  std::vector<FigurePoint> points;
};

/// Inputs of the four figures. Empty grids select the defaults below.
///   1: solution paths of the three problems on the parabola of `frontier`
///      (defaults to r_gmv 0.014, v_gmv 0.0011, s 0.25).
///   2: probability of an inefficient estimated solution against
///      lambda = (mu0 - r_gmv)/sqrt(v_gmv), one curve per s.
///   3: power of the efficiency test against (r_gmv - mu0)/sqrt(v_gmv), so
///      that targets further above the GMV return sit further left.
///   4: estimated frontier of `frontier` (defaults to r 0.0145664,
///      v 0.0010337, s 0.221457) with targets split into accepted and
///      not-rejected at level beta.
struct FigureOptions {
  int figure = 1;
  bool has_frontier = false;
  FrontierParams frontier;
  int n = 60;
  int k = 5;
  double beta = 0.05;
  std::vector<double> s_values;
  std::vector<double> lambda_grid;
  std::vector<double> mu0_grid;
  std::vector<double> alpha_tilde_grid;
  std::vector<double> alpha_inv_grid;
};

FrontierParams illustration_frontier();
FrontierParams estimated_illustration_frontier();

/// Evenly spaced grid from `lo` to `hi` inclusive (count rounded from the step).
std::vector<double> linear_grid(double lo, double hi, double step);

FigureData emit_figure_data(const FigureOptions& options);

}  // namespace mveff::app
