#include <benchmark/benchmark.h>

#include "humplab/formulas.hpp"
#include "humplab/partitions.hpp"

namespace {

namespace formulas = humplab::formulas;

void BM_HcClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formulas::hc_closed(n));
}
BENCHMARK(BM_HcClosed)->Arg(50)->Arg(200)->Arg(500);

// Memoized after the first call, so this measures the cached lookup.
void BM_HcRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formulas::hc_recurrence(n));
}
BENCHMARK(BM_HcRecurrence)->Arg(50)->Arg(200)->Arg(500);

void BM_Hs40Closed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formulas::hs40_closed(n));
}
BENCHMARK(BM_Hs40Closed)->Arg(200);

void BM_HookSum(benchmark::State& state) {
  const humplab::partitions::HookConstraint hook{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const int n = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(humplab::partitions::hook_sum(hook, n));
}
BENCHMARK(BM_HookSum)->Args({2, 1, 60})->Args({5, 0, 25})->Args({3, 0, 60});

void BM_StripClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(humplab::partitions::strip_sum_closed(5, n));
}
BENCHMARK(BM_StripClosed)->Arg(25)->Arg(200);

}  // namespace
