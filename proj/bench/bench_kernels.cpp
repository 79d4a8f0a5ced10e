// Parallel kernels against their serial references. The parallel entry
// points must win (or tie on one core) while producing identical output;
// the equality itself is asserted in the test suite, this target measures.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "streamsnap/ensemble.hpp"
#include "streamsnap/exact.hpp"
#include "streamsnap/simulate.hpp"

using namespace streamsnap;

namespace {

Schedule schedule_for(std::int64_t which) {
  switch (which) {
    case 0: return Schedule::uniform();
    case 1: return Schedule::constant(2.0);
    default: return Schedule::power_law(1.0, 0.5);
  }
}

void BM_terminal_kernel(benchmark::State& state) {
  const Schedule s = schedule_for(state.range(0));
  for (auto _ : state) {
    const auto e = simulate_terminal(s, 10000, 1000, 42);
    benchmark::DoNotOptimize(e.counts.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 1000);
}

void BM_terminal_serial(benchmark::State& state) {
  const Schedule s = schedule_for(state.range(0));
  for (auto _ : state) {
    const auto e = simulate_terminal_serial(s, 10000, 1000, 42);
    benchmark::DoNotOptimize(e.counts.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 1000);
}

void BM_ensemble_run(benchmark::State& state) {
  std::vector<std::uint64_t> items(4096);
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = i;
  for (auto _ : state) {
    Ensemble<std::uint64_t> ens(Schedule::power_law(1.0, 0.5),
                                static_cast<std::size_t>(state.range(0)), 7);
    ens.run(items);
    benchmark::DoNotOptimize(ens.seen());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0) * 4096);
}

void BM_ensemble_run_serial(benchmark::State& state) {
  std::vector<std::uint64_t> items(4096);
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = i;
  for (auto _ : state) {
    Ensemble<std::uint64_t> ens(Schedule::power_law(1.0, 0.5),
                                static_cast<std::size_t>(state.range(0)), 7);
    ens.run_serial(items);
    benchmark::DoNotOptimize(ens.seen());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0) * 4096);
}

void BM_age_pmf_all(benchmark::State& state) {
  const Schedule s = Schedule::power_law(1.0, 0.5);
  for (auto _ : state) {
    const auto pmf = age_pmf_all(s, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(pmf.data());
  }
}

BENCHMARK(BM_terminal_kernel)->Arg(0)->Arg(1)->Arg(2);
BENCHMARK(BM_terminal_serial)->Arg(0)->Arg(1)->Arg(2);
BENCHMARK(BM_ensemble_run)->Arg(256)->Arg(1024);
BENCHMARK(BM_ensemble_run_serial)->Arg(256)->Arg(1024);
BENCHMARK(BM_age_pmf_all)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
