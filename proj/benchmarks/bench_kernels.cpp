#include <benchmark/benchmark.h>

#include "polysum/coset_lattice.hpp"
#include "polysum/polygonal.hpp"
#include "polysum/qseries.hpp"
#include "polysum/spinor_m14.hpp"

using namespace polysum;

static void BM_ThetaCube(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  for (auto _ : state) {
    QSeries t = theta_cube(bound);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(bound);
}
BENCHMARK(BM_ThetaCube)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();

static void BM_CosetTheta(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  const CosetZ3 coset(12, {5, 5, 5});
  for (auto _ : state) {
    QSeries t = theta_series(coset, bound, 1);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(bound);
}
BENCHMARK(BM_CosetTheta)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_RepCount(benchmark::State& state) {
  const std::int64_t ell = 3 * state.range(0) * state.range(0);
  const CosetZ3 coset(12, {5, 5, 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(rep_count(coset, ell));
  }
}
BENCHMARK(BM_RepCount)->Arg(97)->Arg(499)->Arg(1999);

static void BM_ExceptionalSet(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  const PolygonalFamily family(5);
  for (auto _ : state) {
    auto exc = exceptional_set(family, bound, 1);
    benchmark::DoNotOptimize(exc);
  }
  state.SetComplexityN(bound);
}
BENCHMARK(BM_ExceptionalSet)->RangeMultiplier(10)->Range(10000, 1000000)->Complexity();

static void BM_RepresentationCount(benchmark::State& state) {
  const PolygonalFamily family(14);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(representation_count(family, n));
  }
}
BENCHMARK(BM_RepresentationCount)->Arg(1000)->Arg(100000);

static void BM_SiegelWeil(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_siegel_weil(bound, 1));
  }
}
BENCHMARK(BM_SiegelWeil)->Arg(2000)->Arg(27648)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
