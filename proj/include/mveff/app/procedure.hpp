#pragma once

#include <vector>

#include "mveff/estimation.hpp"
#include "mveff/inference.hpp"
#include "mveff/solvers.hpp"

namespace mveff::app {

/// One grid value of the efficiency test: the test outcome, the plug-in
/// utility-slope inverse and the estimated solution's coordinates.
struct ProcedureRow {
  double value = 0.0;  // mu0 or alpha_tilde
  TestResult test;
  double alpha_inv_hat = 0.0;
  MeanVariancePoint point;
};

struct ProcedureReport {
  EstimatedFrontier ef;
  double beta = 0.0;
  double critical_value = 0.0;
  double mu0_threshold = 0.0;
  double alpha_tilde_threshold = 0.0;
  std::vector<ProcedureRow> m_rows;
  std::vector<ProcedureRow> qu_rows;
  /// True when the grid holds both accepted and not-rejected values.
  bool m_crossing = false;
  bool qu_crossing = false;
};

/// Step-by-step efficiency check: estimates once, then tests every target
/// return and every quadratic-utility coefficient at level beta.
ProcedureReport run_efficiency_procedure(const EstimatedFrontier& ef,
                                         const std::vector<double>& mu0_grid,
                                         const std::vector<double>& alpha_tilde_grid,
                                         double beta);

}  // namespace mveff::app
