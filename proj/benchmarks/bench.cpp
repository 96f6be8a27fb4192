#include <benchmark/benchmark.h>

#include "fareylab/constant.hpp"
#include "fareylab/farey.hpp"
#include "fareylab/geometry.hpp"
#include "fareylab/lattice.hpp"

using namespace fareylab;

static void BM_FareyStream(benchmark::State& state) {
  const std::int64_t Q = state.range(0);
  for (auto _ : state) {
    FareyStream s(Q);
    std::int64_t acc = 0;
    for (std::int64_t n = totient_sum(Q); n > 0; --n) {
      acc += s.current().den;
      s.advance();
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * totient_sum(Q));
}
BENCHMARK(BM_FareyStream)->Arg(1000)->Arg(10000);

static void BM_GapHistogram(benchmark::State& state) {
  for (auto _ : state) {
    const GapHistogram h = gap_numerator_counts(state.range(0), 6);
    benchmark::DoNotOptimize(h.total());
  }
}
BENCHMARK(BM_GapHistogram)->Arg(2000)->Arg(5000);

static void BM_PullbackRegion(benchmark::State& state) {
  const std::vector<std::int64_t> xs = {1, 2, 1, 3};
  for (auto _ : state) {
    const ConvexPolygon p = pullback_region(xs);
    benchmark::DoNotOptimize(p.area());
  }
}
BENCHMARK(BM_PullbackRegion);

static void BM_VisibleCount(benchmark::State& state) {
  const ConvexPolygon region = farey_triangle().scaled(state.range(0));
  const ResiduePairSet S = coprime_pairs(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(visible_count(region, S));
  }
}
BENCHMARK(BM_VisibleCount)->Arg(500)->Arg(2000);

static void BM_ComputeConstant(benchmark::State& state) {
  for (auto _ : state) {
    const ConstantReport r = compute_constant(6, state.range(0));
    benchmark::DoNotOptimize(r.c_value);
  }
}
BENCHMARK(BM_ComputeConstant)->Arg(1)->Arg(3);

BENCHMARK_MAIN();
