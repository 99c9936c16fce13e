#include "mveff/app/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mveff/app/csv_ingest.hpp"
#include "mveff/app/figures.hpp"
#include "mveff/app/output.hpp"
#include "mveff/app/procedure.hpp"
#include "mveff/equivalence.hpp"
#include "mveff/error.hpp"
#include "mveff/estimation.hpp"
#include "mveff/inference.hpp"
#include "mveff/mc_oracle.hpp"
#include "mveff/solvers.hpp"

namespace mveff::app {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::InvalidArgument, msg);
}

double parse_number(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end == text.c_str() || *end != '\0') invalid("not a number: '" + text + "'");
  return v;
}

/// Frontier given either by a return file or by direct parameter flags.
struct FrontierFlags {
  std::string input;
  double r_gmv = kUnset;
  double v_gmv = kUnset;
  double s = kUnset;
  int n = 0;
  int k = 0;
};

struct ResolvedFrontier {
  FrontierParams params;
  SampleShape shape;
  std::optional<ReturnTable> table;
};

void add_frontier_flags(CLI::App* cmd, FrontierFlags& f, bool with_input) {
  if (with_input) {
    cmd->add_option("--input,-i", f.input,
                    "CSV of decimal returns (0.014 = 1.4%): header of asset names, one row per period");
  }
  cmd->add_option("--r-gmv", f.r_gmv, "expected return of the global minimum variance portfolio");
  cmd->add_option("--v-gmv", f.v_gmv, "variance of the global minimum variance portfolio");
  cmd->add_option("--s-slope", f.s, "slope parameter of the parabola");
  cmd->add_option("--n", f.n, "sample size (periods)");
  cmd->add_option("--k", f.k, "number of assets");
}

bool any_direct(const FrontierFlags& f) {
  return !std::isnan(f.r_gmv) || !std::isnan(f.v_gmv) || !std::isnan(f.s);
}

ResolvedFrontier resolve(const FrontierFlags& f, bool need_shape) {
  ResolvedFrontier out;
  if (!f.input.empty()) {
    if (any_direct(f) || f.n != 0 || f.k != 0) {
      invalid("--input cannot be combined with --r-gmv/--v-gmv/--s-slope/--n/--k");
    }
    out.table = ingest_returns(f.input);
    const EstimatedFrontier ef = estimate_frontier(out.table->sample);
    out.params = ef.params();
    out.shape = {ef.n, ef.k};
    return out;
  }
  if (std::isnan(f.r_gmv) || std::isnan(f.v_gmv) || std::isnan(f.s)) {
    invalid("supply --input or all of --r-gmv, --v-gmv, --s-slope");
  }
  out.params = make_frontier_params(f.r_gmv, f.v_gmv, f.s);
  if (need_shape) {
    if (f.n == 0 || f.k == 0) invalid("--n and --k are required with direct frontier parameters");
    make_estimated_frontier(f.r_gmv, f.v_gmv, f.s, f.n, f.k);
    out.shape = {f.n, f.k};
  }
  return out;
}

EstimatedFrontier as_estimate(const ResolvedFrontier& r) {
  return make_estimated_frontier(r.params.r_gmv, r.params.v_gmv, r.params.s, r.shape.n,
                                 r.shape.k);
}

void echo_frontier(Report& rep, const ResolvedFrontier& r, bool with_shape) {
  rep.params["source"] = r.table ? "input" : "flags";
  rep.params["r_gmv"] = num(r.params.r_gmv);
  rep.params["v_gmv"] = num(r.params.v_gmv);
  rep.params["s"] = num(r.params.s);
  if (with_shape) {
    rep.params["n"] = r.shape.n;
    rep.params["k"] = r.shape.k;
  }
}

Json grid_json(const std::vector<double>& g) {
  Json a = Json::array();
  for (double x : g) a.push_back(num(x));
  return a;
}

std::vector<double> optional_grid(const std::string& text) {
  return text.empty() ? std::vector<double>{} : parse_grid(text);
}

void require_problem(const std::string& problem, bool allow_mvu) {
  if (problem == "m" || problem == "qu" || (allow_mvu && problem == "mvu")) return;
  invalid("--problem must be " + std::string(allow_mvu ? "m, mvu or qu" : "m or qu"));
}

// ---- frontier -------------------------------------------------------------

Report cmd_frontier(const FrontierFlags& flags) {
  if (flags.input.empty()) invalid("frontier needs --input");
  const ResolvedFrontier r = resolve(flags, true);
  const AssetMoments m = sample_moments(r.table->sample);
  const EfficientSetConstants c = efficient_set_constants(m);
  const PortfolioWeights gmv = gmv_weights(m);

  Report rep;
  rep.command = "frontier";
  rep.params["input"] = flags.input;
  rep.summary["n"] = r.shape.n;
  rep.summary["k"] = r.shape.k;
  rep.summary["r_gmv_hat"] = num(r.params.r_gmv);
  rep.summary["v_gmv_hat"] = num(r.params.v_gmv);
  rep.summary["s_hat"] = num(r.params.s);
  rep.summary["a"] = num(c.a);
  rep.summary["b"] = num(c.b);
  rep.summary["c"] = num(c.c);
  for (int i = 0; i < m.k(); ++i) {
    Json row;
    row["asset"] = r.table->assets[static_cast<std::size_t>(i)];
    row["mean"] = num(m.mu()(i));
    row["variance"] = num(m.sigma()(i, i));
    row["gmv_weight"] = num(gmv.w(i));
    rep.rows.push_back(row);
  }
  return rep;
}

// ---- solve ----------------------------------------------------------------

struct SolveFlags {
  std::string input;
  std::string problem;
  std::string value;
};

Report cmd_solve(const SolveFlags& flags) {
  require_problem(flags.problem, true);
  if (flags.input.empty()) invalid("solve needs --input");
  if (flags.value.empty()) invalid("solve needs --mu0, --alpha or --alpha-tilde");
  const ReturnTable table = ingest_returns(flags.input);
  const AssetMoments m = sample_moments(table.sample);
  const FrontierParams f = frontier_params(m);

  const double v = parse_number(flags.value);
  PortfolioWeights p;
  bool efficient = true;
  if (flags.problem == "m") {
    p = solve_markowitz(m, v);
    efficient = map_m_to_mvu(f, v).efficient;
  } else if (flags.problem == "mvu") {
    p = solve_mvu(m, v);
  } else {
    p = solve_qu(m, v);
    efficient = map_qu_to_mvu(f, v).efficient;
  }

  Report rep;
  rep.command = "solve";
  rep.params["input"] = flags.input;
  rep.params["problem"] = flags.problem;
  rep.params[flags.problem == "m" ? "mu0" : flags.problem == "mvu" ? "alpha" : "alpha_tilde"] = num(v);
  rep.summary["expected_return"] = num(p.expected_return);
  rep.summary["variance"] = num(p.variance);
  rep.summary["weight_sum"] = num(p.w.sum());
  rep.summary["efficient"] = efficient;
  rep.summary["parabola_residual"] = num(parabola_residual(f, p));
  for (int i = 0; i < m.k(); ++i) {
    Json row;
    row["asset"] = table.assets[static_cast<std::size_t>(i)];
    row["weight"] = num(p.w(i));
    rep.rows.push_back(row);
  }
  return rep;
}

// ---- map ------------------------------------------------------------------

struct GridFlags {
  std::string problem = "m";
  std::string mu0;
  std::string alpha_tilde;
  std::string lambda;
  double beta = 0.05;
};

/// Grid of the chosen problem's input: mu0 for m, alpha_tilde for qu.
std::vector<double> problem_grid(const GridFlags& g) {
  const std::string& text = g.problem == "m" ? g.mu0 : g.alpha_tilde;
  if (text.empty()) invalid(g.problem == "m" ? "--mu0 grid required" : "--alpha-tilde grid required");
  return parse_grid(text);
}

Report cmd_map(const FrontierFlags& ff, const GridFlags& g) {
  require_problem(g.problem, false);
  const ResolvedFrontier r = resolve(ff, false);
  Report rep;
  rep.command = "map";
  echo_frontier(rep, r, false);
  rep.params["problem"] = g.problem;
  const std::vector<double> grid = problem_grid(g);
  rep.params["grid"] = grid_json(grid);
  for (double x : grid) {
    const EquivalenceResult e = g.problem == "m" ? map_m_to_mvu(r.params, x) : map_qu_to_mvu(r.params, x);
    Json row;
    row["value"] = num(x);
    row["alpha_inv"] = num(e.alpha_inv);
    if (!e.alpha) {
      row["alpha"] = nullptr;
    } else if (e.alpha->is_infinite()) {
      row["alpha"] = "inf";
    } else {
      row["alpha"] = num(e.alpha->value());
    }
    row["lambda"] = num(e.lambda);
    row["efficient"] = e.efficient;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---- prob-inefficient and power -------------------------------------------

/// Lambda grid either given directly (needs only s, n, k) or derived from a
/// problem grid through the frontier parameters.
struct LambdaGrid {
  std::vector<double> values;
  std::vector<double> lambdas;
  double s = 0.0;
  SampleShape shape;
};

LambdaGrid lambda_grid(Report& rep, const FrontierFlags& ff, const GridFlags& g) {
  LambdaGrid out;
  if (!g.lambda.empty()) {
    if (!ff.input.empty() || !std::isnan(ff.r_gmv) || !std::isnan(ff.v_gmv)) {
      invalid("--lambda takes only --s-slope, --n and --k");
    }
    if (std::isnan(ff.s)) invalid("--lambda needs --s-slope");
    if (ff.n == 0 || ff.k == 0) invalid("--lambda needs --n and --k");
    make_estimated_frontier(0.0, 1.0, ff.s, ff.n, ff.k);
    out.lambdas = parse_grid(g.lambda);
    out.values = out.lambdas;
    out.s = ff.s;
    out.shape = {ff.n, ff.k};
    rep.params["s"] = num(ff.s);
    rep.params["n"] = ff.n;
    rep.params["k"] = ff.k;
    rep.params["lambda"] = grid_json(out.lambdas);
    return out;
  }
  require_problem(g.problem, false);
  const ResolvedFrontier r = resolve(ff, true);
  echo_frontier(rep, r, true);
  rep.params["problem"] = g.problem;
  out.values = problem_grid(g);
  rep.params["grid"] = grid_json(out.values);
  for (double x : out.values) {
    out.lambdas.push_back(g.problem == "m" ? lambda_m(r.params, x) : lambda_qu(r.params, x));
  }
  out.s = r.params.s;
  out.shape = r.shape;
  return out;
}

Report cmd_prob_inefficient(const FrontierFlags& ff, const GridFlags& g) {
  Report rep;
  rep.command = "prob-inefficient";
  const LambdaGrid lg = lambda_grid(rep, ff, g);
  const std::vector<double> p = prob_inefficient_curve(lg.lambdas, lg.s, lg.shape);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json row;
    row["value"] = num(lg.values[i]);
    row["lambda"] = num(lg.lambdas[i]);
    row["probability"] = num(p[i]);
    rep.rows.push_back(row);
  }
  return rep;
}

Report cmd_power(const FrontierFlags& ff, const GridFlags& g) {
  Report rep;
  rep.command = "power";
  const LambdaGrid lg = lambda_grid(rep, ff, g);
  rep.params["beta"] = num(g.beta);
  const std::vector<double> p = power_curve(lg.lambdas, lg.s, lg.shape, g.beta);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json row;
    row["value"] = num(lg.values[i]);
    row["lambda"] = num(lg.lambdas[i]);
    row["power"] = num(p[i]);
    rep.rows.push_back(row);
  }
  return rep;
}

// ---- test-efficiency ------------------------------------------------------

Report cmd_test_efficiency(const FrontierFlags& ff, const GridFlags& g) {
  const ResolvedFrontier r = resolve(ff, true);
  const std::vector<double> mu0 = optional_grid(g.mu0);
  const std::vector<double> at = optional_grid(g.alpha_tilde);
  const ProcedureReport pr = run_efficiency_procedure(as_estimate(r), mu0, at, g.beta);

  Report rep;
  rep.command = "test-efficiency";
  echo_frontier(rep, r, true);
  rep.params["beta"] = num(g.beta);
  rep.params["mu0"] = grid_json(mu0);
  rep.params["alpha_tilde"] = grid_json(at);
  rep.summary["critical_value"] = num(pr.critical_value);
  rep.summary["mu0_threshold"] = num(pr.mu0_threshold);
  rep.summary["alpha_tilde_threshold"] = num(pr.alpha_tilde_threshold);
  rep.summary["m_crossing"] = pr.m_crossing;
  rep.summary["qu_crossing"] = pr.qu_crossing;
  const auto emit = [&rep](const char* problem, const std::vector<ProcedureRow>& rows) {
    for (const ProcedureRow& x : rows) {
      Json row;
      row["problem"] = problem;
      row["value"] = num(x.value);
      row["statistic"] = num(x.test.statistic);
      row["p_value"] = num(x.test.p_value);
      row["decision"] = x.test.accept_efficiency ? "accepted" : "not_rejected";
      row["alpha_inv_hat"] = num(x.alpha_inv_hat);
      row["variance"] = num(x.point.variance);
      row["expected_return"] = num(x.point.expected_return);
      rep.rows.push_back(row);
    }
  };
  emit("m", pr.m_rows);
  emit("qu", pr.qu_rows);
  return rep;
}

// ---- emit-figure ----------------------------------------------------------

struct FigureFlags {
  int figure = 0;
  double r_gmv = kUnset;
  double v_gmv = kUnset;
  double s = kUnset;
  int n = 60;
  int k = 5;
  double beta = 0.05;
  std::string s_values;
  std::string lambda;
  std::string mu0;
  std::string alpha_tilde;
  std::string alpha_inv;
};

Report cmd_emit_figure(const FigureFlags& ff) {
  FigureOptions o;
  o.figure = ff.figure;
  const int given = !std::isnan(ff.r_gmv) + !std::isnan(ff.v_gmv) + !std::isnan(ff.s);
  if (given != 0 && given != 3) invalid("give all of --r-gmv, --v-gmv, --s-slope or none");
  if (given == 3) {
    o.has_frontier = true;
    o.frontier = make_frontier_params(ff.r_gmv, ff.v_gmv, ff.s);
  }
  if (!(ff.n > ff.k && ff.k >= 2)) invalid("need n > k >= 2");
  o.n = ff.n;
  o.k = ff.k;
  o.beta = ff.beta;
  o.s_values = optional_grid(ff.s_values);
  o.lambda_grid = optional_grid(ff.lambda);
  o.mu0_grid = optional_grid(ff.mu0);
  o.alpha_tilde_grid = optional_grid(ff.alpha_tilde);
  o.alpha_inv_grid = optional_grid(ff.alpha_inv);
  const FigureData d = emit_figure_data(o);

  Report rep;
  rep.command = "emit-figure";
  rep.params["figure"] = ff.figure;
  rep.params["n"] = o.n;
  rep.params["k"] = o.k;
  rep.params["beta"] = num(o.beta);
  if (o.has_frontier) {
    rep.params["r_gmv"] = num(o.frontier.r_gmv);
    rep.params["v_gmv"] = num(o.frontier.v_gmv);
    rep.params["s"] = num(o.frontier.s);
  }
  rep.summary["x_label"] = d.x_label;
  rep.summary["y_label"] = d.y_label;
  rep.summary["points"] = d.points.size();
  for (const FigurePoint& p : d.points) {
    Json row;
    row["x"] = num(p.x);
    row["y"] = num(p.y);
    row["series"] = p.series;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---- mc-validate ----------------------------------------------------------

struct McFlags {
  long reps = 10000;
  unsigned long long seed = kDefaultSeed;
};

Report cmd_mc_validate(const FrontierFlags& ff, const GridFlags& g, const McFlags& mc) {
  const ResolvedFrontier r = resolve(ff, true);
  std::vector<double> mu0 = optional_grid(g.mu0);
  if (mu0.empty()) {
    for (double lambda : {-0.5, -0.25, 0.0, 0.25, 0.5}) {
      mu0.push_back(r.params.r_gmv + lambda * std::sqrt(r.params.v_gmv));
    }
  }
  const McConfig cfg = r.table
                           ? make_mc_config(sample_moments(r.table->sample), r.shape.n, mc.reps, mc.seed)
                           : make_mc_config(r.params, r.shape.n, r.shape.k, mc.reps, mc.seed);

  Report rep;
  rep.command = "mc-validate";
  echo_frontier(rep, r, true);
  rep.params["beta"] = num(g.beta);
  rep.params["reps"] = mc.reps;
  rep.params["seed"] = mc.seed;
  rep.params["mu0"] = grid_json(mu0);

  const SamplingLawReport p1 = sampling_law_checks(cfg);
  rep.summary["ks_variance_p"] = num(p1.variance_pivot.p_value);
  rep.summary["ks_slope_p"] = num(p1.slope_pivot.p_value);
  rep.summary["ks_return_p"] = num(p1.return_pivot.p_value);
  rep.summary["corr_v_r"] = num(p1.corr_v_r);
  rep.summary["corr_v_s"] = num(p1.corr_v_s);
  rep.summary["independence_p"] = num(p1.v_r_independence.p_value);

  const FrontierParams truth = frontier_params(cfg.truth);
  for (double x : mu0) {
    const McSummary pi = empirical_prob_inefficient_m(cfg, x);
    const McSummary pw = empirical_power(cfg, x, g.beta);
    Json row;
    row["mu0"] = num(x);
    row["lambda"] = num(lambda_m(truth, x));
    row["prob_analytic"] = num(prob_inefficient_m(truth, r.shape, x));
    row["prob_mc"] = num(pi.estimate);
    row["prob_se"] = num(pi.std_error);
    row["power_analytic"] = num(power_m_test(truth, r.shape, x, g.beta));
    row["power_mc"] = num(pw.estimate);
    row["power_se"] = num(pw.std_error);
    rep.rows.push_back(row);
  }
  return rep;
}

// ---- simulate -------------------------------------------------------------

void cmd_simulate(std::ostream& out, const FrontierFlags& ff, unsigned long long seed) {
  if (!ff.input.empty()) invalid("simulate takes direct frontier parameters only");
  const ResolvedFrontier r = resolve(ff, true);
  const AssetMoments truth = synthesize_moments(r.params, r.shape.k, seed);
  SplitMix64 rng = replication_stream(seed, 0);
  const ReturnSample sample = simulate_sample(truth, r.shape.n, rng);
  std::vector<std::string> assets;
  for (int i = 1; i <= r.shape.k; ++i) assets.push_back("SYN" + std::to_string(i));
  write_returns(out, assets, sample.data());
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  if (sep == ':') {
    if (parts.size() != 3) invalid("range grid must be lo:hi:step, got '" + text + "'");
    return linear_grid(parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]));
  }
  std::vector<double> grid;
  for (const std::string& p : parts) grid.push_back(parse_number(p));
  if (grid.empty()) invalid("empty grid");
  return grid;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean-variance efficiency of optimal portfolios: closed-form solvers, "
               "inefficiency probabilities and exact efficiency tests.\n"
               "Returns are decimal (0.014 = 1.4%)."};
  app.set_config("--config", "", "TOML file with flag values ([subcommand] sections)");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", output, "write to this file instead of stdout");

  FrontierFlags frontier_flags;
  GridFlags grid_flags;
  SolveFlags solve_flags;
  FigureFlags figure_flags;
  McFlags mc_flags;
  const auto seed_option = [&mc_flags](CLI::App* cmd) {
    cmd->add_option("--seed", mc_flags.seed, "random seed")
        ->envname("MVEFF_SEED")
        ->capture_default_str();
  };
  const auto problem_grids = [&grid_flags](CLI::App* cmd, bool lambda) {
    cmd->add_option("--mu0", grid_flags.mu0, "target returns: lo:hi:step or a,b,c");
    cmd->add_option("--alpha-tilde", grid_flags.alpha_tilde,
                    "quadratic-utility coefficients: lo:hi:step or a,b,c");
    if (lambda) {
      cmd->add_option("--lambda", grid_flags.lambda,
                      "standardized distances (mu0 - r_gmv)/sqrt(v_gmv): lo:hi:step or a,b,c");
    }
  };

  auto* frontier = app.add_subcommand("frontier", "estimate the efficient frontier from a return file");
  frontier->add_option("--input,-i", frontier_flags.input, "CSV of decimal returns")->required();

  auto* solve = app.add_subcommand("solve", "optimal weights for one problem from a return file");
  solve->add_option("--input,-i", solve_flags.input, "CSV of decimal returns")->required();
  solve->add_option("--problem", solve_flags.problem, "m, mvu or qu")->required();
  auto* solve_mu0 = solve->add_option("--mu0", solve_flags.value, "target return (m)");
  auto* solve_alpha = solve->add_option("--alpha", solve_flags.value, "risk slope, inf allowed (mvu)");
  auto* solve_at = solve->add_option("--alpha-tilde", solve_flags.value, "quadratic-utility coefficient (qu)");
  solve_mu0->excludes(solve_alpha)->excludes(solve_at);
  solve_alpha->excludes(solve_at);

  auto* map = app.add_subcommand("map", "equivalent utility slopes of Markowitz targets or QU coefficients");
  add_frontier_flags(map, frontier_flags, true);
  map->add_option("--problem", grid_flags.problem, "m or qu")->capture_default_str();
  problem_grids(map, false);

  auto* prob = app.add_subcommand("prob-inefficient", "probability that the estimated solution is inefficient");
  add_frontier_flags(prob, frontier_flags, true);
  prob->add_option("--problem", grid_flags.problem, "m or qu")->capture_default_str();
  problem_grids(prob, true);

  auto* test = app.add_subcommand("test-efficiency", "exact test of efficiency over target grids");
  add_frontier_flags(test, frontier_flags, true);
  test->add_option("--beta", grid_flags.beta, "significance level")->capture_default_str();
  problem_grids(test, false);

  auto* power = app.add_subcommand("power", "power of the Markowitz efficiency test");
  add_frontier_flags(power, frontier_flags, true);
  power->add_option("--beta", grid_flags.beta, "significance level")->capture_default_str();
  problem_grids(power, true);

  auto* figure = app.add_subcommand("emit-figure", "plot data (x, y, series) for figures 1 to 4");
  figure->add_option("--figure", figure_flags.figure, "1, 2, 3 or 4")->required();
  figure->add_option("--r-gmv", figure_flags.r_gmv, "override the frontier (figures 1 and 4)");
  figure->add_option("--v-gmv", figure_flags.v_gmv, "override the frontier (figures 1 and 4)");
  figure->add_option("--s-slope", figure_flags.s, "override the frontier (figures 1 and 4)");
  figure->add_option("--n", figure_flags.n, "sample size")->capture_default_str();
  figure->add_option("--k", figure_flags.k, "number of assets")->capture_default_str();
  figure->add_option("--beta", figure_flags.beta, "significance level")->capture_default_str();
  figure->add_option("--s-values", figure_flags.s_values, "slopes for figures 2 and 3");
  figure->add_option("--lambda", figure_flags.lambda, "x grid for figures 2 and 3");
  figure->add_option("--mu0", figure_flags.mu0, "target grid for figures 1 and 4");
  figure->add_option("--alpha-tilde", figure_flags.alpha_tilde, "QU grid for figures 1 and 4");
  figure->add_option("--alpha-inv", figure_flags.alpha_inv, "MVU 1/alpha grid for figure 1");

  auto* mc = app.add_subcommand("mc-validate", "Monte Carlo check of the analytic results");
  add_frontier_flags(mc, frontier_flags, true);
  mc->add_option("--mu0", grid_flags.mu0, "target returns (default: lambda in -0.5..0.5)");
  mc->add_option("--beta", grid_flags.beta, "significance level")->capture_default_str();
  mc->add_option("--reps", mc_flags.reps, "replications")->capture_default_str();
  seed_option(mc);

  auto* simulate = app.add_subcommand("simulate", "synthetic return CSV with the given frontier");
  add_frontier_flags(simulate, frontier_flags, false);
  seed_option(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    std::ostringstream buffer;
    const Format fmt = format == "csv" ? Format::Csv : Format::Json;
    if (simulate->parsed()) {
      cmd_simulate(buffer, frontier_flags, mc_flags.seed);
    } else {
      Report rep;
      if (frontier->parsed()) rep = cmd_frontier(frontier_flags);
      if (solve->parsed()) rep = cmd_solve(solve_flags);
      if (map->parsed()) rep = cmd_map(frontier_flags, grid_flags);
      if (prob->parsed()) rep = cmd_prob_inefficient(frontier_flags, grid_flags);
      if (test->parsed()) rep = cmd_test_efficiency(frontier_flags, grid_flags);
      if (power->parsed()) rep = cmd_power(frontier_flags, grid_flags);
      if (figure->parsed()) rep = cmd_emit_figure(figure_flags);
      if (mc->parsed()) rep = cmd_mc_validate(frontier_flags, grid_flags, mc_flags);
      render(buffer, rep, fmt);
    }
    if (output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(output);
      if (!file) invalid("cannot write '" + output + "'");
      file << buffer.str();
    }
    return 0;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.is_numeric() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mveff"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mveff::app
