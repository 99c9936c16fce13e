#include "mveff/app/procedure.hpp"

#include <algorithm>

#include "mveff/equivalence.hpp"

namespace mveff::app {

namespace {

bool has_crossing(const std::vector<ProcedureRow>& rows) {
  const auto accepted = [](const ProcedureRow& r) { return r.test.accept_efficiency; };
  return std::any_of(rows.begin(), rows.end(), accepted) &&
         !std::all_of(rows.begin(), rows.end(), accepted);
}

}  // namespace

ProcedureReport run_efficiency_procedure(const EstimatedFrontier& ef,
                                         const std::vector<double>& mu0_grid,
                                         const std::vector<double>& alpha_tilde_grid,
                                         double beta) {
  ProcedureReport report;
  report.ef = ef;
  report.beta = beta;
  report.mu0_threshold = m_acceptance_threshold(ef, beta);
  report.alpha_tilde_threshold = qu_acceptance_threshold(ef, beta);
  const FrontierParams f = ef.params();

  for (double mu0 : mu0_grid) {
    ProcedureRow row;
    row.value = mu0;
    row.test = test_m_efficiency(ef, mu0, beta);
    row.alpha_inv_hat = map_m_to_mvu(f, mu0).alpha_inv;
    row.point = markowitz_point(f, mu0);
    report.critical_value = row.test.critical_value;
    report.m_rows.push_back(row);
  }
  for (double at : alpha_tilde_grid) {
    ProcedureRow row;
    row.value = at;
    row.test = test_qu_efficiency(ef, at, beta);
    row.alpha_inv_hat = map_qu_to_mvu(f, at).alpha_inv;
    row.point = qu_point(f, at);
    report.critical_value = row.test.critical_value;
    report.qu_rows.push_back(row);
  }
  if (mu0_grid.empty() && alpha_tilde_grid.empty()) {
    report.critical_value = test_m_efficiency(ef, ef.r_hat, beta).critical_value;
  }
  report.m_crossing = has_crossing(report.m_rows);
  report.qu_crossing = has_crossing(report.qu_rows);
  return report;
}

}  // namespace mveff::app
