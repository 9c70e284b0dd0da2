#include <benchmark/benchmark.h>

#include "ifm/closed_form.hpp"
#include "ifm/interferometer.hpp"
#include "ifm/monte_carlo.hpp"
#include "ifm/solver.hpp"

namespace {

void BM_Product(benchmark::State& state) {
  const ifm::InterferometerConfig cfg(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(ifm::exact_success_probability_product(cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Product)->RangeMultiplier(10)->Range(10, 1'000'000)->Complexity(benchmark::oN);

void BM_ClosedForm(benchmark::State& state) {
  const ifm::InterferometerConfig cfg(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(ifm::closed_form_success_probability(cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(10)->Range(10, 1'000'000)->Complexity(benchmark::oLogN);

void BM_MonteCarlo(benchmark::State& state) {
  const ifm::InterferometerConfig cfg(20, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ifm::estimate_probabilities(cfg, static_cast<std::uint64_t>(state.range(0)), 42, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_MinSplitters(benchmark::State& state) {
  const double targets[] = {0.9, 0.99, 0.999};
  const ifm::DesignQuery query{0.5, targets[state.range(0)]};
  for (auto _ : state) benchmark::DoNotOptimize(ifm::min_beam_splitters(query));
}
BENCHMARK(BM_MinSplitters)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_MaxTolerableEta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ifm::max_tolerable_eta(200, 0.95));
}
BENCHMARK(BM_MaxTolerableEta)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
