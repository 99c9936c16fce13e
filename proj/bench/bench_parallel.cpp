// Serial reference vs OpenMP paths of the replication and curve kernels.

#include <vector>

#include <benchmark/benchmark.h>

#include "mveff/inference.hpp"
#include "mveff/mc_oracle.hpp"

namespace {

using mveff::Execution;

const mveff::FrontierParams kTruth{0.0145664, 0.0010337, 0.221457};
constexpr mveff::SampleShape kShape{60, 5};

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

std::vector<double> lambda_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(-1.0 + 0.05 * i);
  return grid;
}

void BM_Replications(benchmark::State& state) {
  const mveff::McConfig cfg = mveff::make_mc_config(kTruth, kShape.n, kShape.k, state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(mveff::run_replications(cfg, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_Replications)->ArgNames({"parallel", "reps"})->Args({0, 10000})->Args({1, 10000})
    ->Unit(benchmark::kMillisecond);

void BM_ProbInefficientCurve(benchmark::State& state) {
  const std::vector<double> grid = lambda_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mveff::prob_inefficient_curve(grid, kTruth.s, kShape, {}, mode(state)));
  }
}
BENCHMARK(BM_ProbInefficientCurve)->ArgNames({"parallel"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PowerCurve(benchmark::State& state) {
  const std::vector<double> grid = lambda_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mveff::power_curve(grid, kTruth.s, kShape, 0.05, {}, mode(state)));
  }
}
BENCHMARK(BM_PowerCurve)->ArgNames({"parallel"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
