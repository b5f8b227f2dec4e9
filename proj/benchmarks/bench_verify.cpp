#include <benchmark/benchmark.h>

#include "mcbc/constructions.hpp"
#include "mcbc/verify.hpp"

static void BM_MultisetHallAffine(benchmark::State& state) {
  auto code = mcbc::steiner_to_mcbc(mcbc::affine_plane(4), 7, 4);
  for (auto _ : state) {
    auto res = mcbc::verify_multiset_hall(code.item_view, 7, 4);
    benchmark::DoNotOptimize(res.valid);
  }
}
BENCHMARK(BM_MultisetHallAffine);

static void BM_ClassicalHallAffine(benchmark::State& state) {
  auto code = mcbc::steiner_to_mcbc(mcbc::affine_plane(4), 7, 4);
  for (auto _ : state) {
    auto res = mcbc::verify_kt_hall_cbc(code.item_view, 16, 1);
    benchmark::DoNotOptimize(res.valid);
  }
}
BENCHMARK(BM_ClassicalHallAffine);

static void BM_UnionTable(benchmark::State& state) {
  auto code = mcbc::steiner_to_mcbc(mcbc::affine_plane(4), 7, 4);
  for (auto _ : state) {
    auto table = mcbc::union_size_table(code.item_view, state.range(0));
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_UnionTable)->Arg(3)->Arg(6);
