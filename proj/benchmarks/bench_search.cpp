#include <benchmark/benchmark.h>

#include "mcbc/search.hpp"

static void BM_OptimalStorageSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = mcbc::exhaustive_optimal_N(n, 3, 4, 2);
    benchmark::DoNotOptimize(res->optimal_storage);
  }
}
BENCHMARK(BM_OptimalStorageSearch)->Arg(3)->Arg(4)->Arg(5);
