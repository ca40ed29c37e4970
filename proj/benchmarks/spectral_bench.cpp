#include <benchmark/benchmark.h>

#include "nlsenergy/energy/energy.hpp"
#include "nlsenergy/spectral/evaluate.hpp"
#include "nlsenergy/spectral/monitors.hpp"
#include "nlsenergy/spectral/solver.hpp"
#include "nlsenergy/spectral/state.hpp"

namespace {

using namespace nlsenergy;

void BM_SolverStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const spectral::Solver solver(n, 2, {.dt = 1e-3});
  auto s = spectral::random_state(0, n, 3.0, 1.0);
  for (auto _ : state) {
    solver.step(s);
    benchmark::DoNotOptimize(s.modes.data());
  }
}
BENCHMARK(BM_SolverStep)->RangeMultiplier(2)->Range(32, 512);

void BM_EvaluateExactDerivative(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto e = energy::build_energy(k, 2);
  const auto s = spectral::random_state(0, 64, 3.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::evaluate_expr(e.exact_derivative, s));
  state.counters["terms"] = static_cast<double>(e.exact_derivative.size());
}
BENCHMARK(BM_EvaluateExactDerivative)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_DerivativeCrosscheck(benchmark::State& state) {
  const auto e = energy::build_energy(4, 2);
  const auto s = spectral::random_state(0, 64, 3.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::derivative_crosscheck(e, s, {.dt = 4e-7}, 10));
}
BENCHMARK(BM_DerivativeCrosscheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
