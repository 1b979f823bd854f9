#include <benchmark/benchmark.h>

#include "ringfill/lifecycle.hpp"
#include "ringfill/sweep.hpp"

namespace {

using ringfill::PlacementParams;
using ringfill::SweepDomain;

void BM_SweepSerial(benchmark::State& state) {
  const SweepDomain d{1, static_cast<std::uint64_t>(state.range(0)), 4, 2, false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ringfill::sweep_serial(d));
  }
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepDomain d{1, static_cast<std::uint64_t>(state.range(0)), 4, 2, false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ringfill::sweep(d));
  }
}

void BM_LifecycleSerial(benchmark::State& state) {
  const PlacementParams p{static_cast<std::uint64_t>(state.range(0)), 64, 24, 7, 97};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ringfill::run_lifecycle(p));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LifecycleParallel(benchmark::State& state) {
  const PlacementParams p{static_cast<std::uint64_t>(state.range(0)), 64, 24, 7, 97};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ringfill::run_lifecycle_parallel(p));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LifecycleSerial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LifecycleParallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
