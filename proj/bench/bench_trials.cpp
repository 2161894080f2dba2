// Serial reference runner vs. the OpenMP runner on the randomized trial suites.

#include <benchmark/benchmark.h>

#include "majorant/experiment.hpp"
#include "majorant/horn.hpp"

namespace {

using majorant::Execution;

void pinch_experiment(benchmark::State& state, Execution execution) {
  majorant::PinchExperimentConfig config;
  config.n = static_cast<std::size_t>(state.range(0));
  config.trials = 64;
  config.seed = 7;
  for (auto _ : state) {
    auto report = majorant::run_pinch_experiment(config, execution);
    benchmark::DoNotOptimize(report.min_witness);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.trials));
}

void horn_round_trips(benchmark::State& state, Execution execution) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto errors = majorant::run_trials<double>(
        64, 11,
        [n](majorant::Rng& rng, std::size_t) {
          const auto pair = majorant::random_majorizing_pair(n, rng);
          const auto a = majorant::horn_construct(pair.lambda, pair.p);
          return a.trace();
        },
        execution);
    benchmark::DoNotOptimize(errors.data());
  }
  state.SetItemsProcessed(state.iterations() * 64);
}

}  // namespace

BENCHMARK_CAPTURE(pinch_experiment, serial, Execution::serial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pinch_experiment, openmp, Execution::parallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(horn_round_trips, serial, Execution::serial)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(horn_round_trips, openmp, Execution::parallel)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
