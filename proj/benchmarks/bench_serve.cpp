#include <benchmark/benchmark.h>

#include "mcbc/constructions.hpp"
#include "mcbc/exhaustive.hpp"
#include "mcbc/request.hpp"

static void BM_ServeRequest(benchmark::State& state) {
  auto code = mcbc::steiner_to_mcbc(mcbc::affine_plane(4), 7, 4);
  auto req = mcbc::MultisetRequest::parse("1,1,1,1,2,2,3");
  for (auto _ : state) {
    auto assignment = mcbc::serve_request(code, req, 1);
    benchmark::DoNotOptimize(assignment.has_value());
  }
}
BENCHMARK(BM_ServeRequest);

static void BM_ExhaustiveSmall(benchmark::State& state) {
  auto code = mcbc::construct_diagonal(4, 5, 2);
  for (auto _ : state) {
    auto res = mcbc::verify_exhaustive(code, 5, 2, 1);
    benchmark::DoNotOptimize(res.valid);
  }
}
BENCHMARK(BM_ExhaustiveSmall);

static void BM_ExhaustiveAffine(benchmark::State& state) {
  auto code = mcbc::steiner_to_mcbc(mcbc::affine_plane(4), 7, 4);
  for (auto _ : state) {
    auto res = mcbc::verify_exhaustive(code, 7, 4, 1, 1'000'000ULL);
    benchmark::DoNotOptimize(res.valid);
  }
}
BENCHMARK(BM_ExhaustiveAffine);
