#include <benchmark/benchmark.h>

#include "bncount/codim2.hpp"
#include "bncount/det_oracle.hpp"
#include "bncount/pointed.hpp"

namespace {

using namespace bncount;

// Weierstrass-type sequence (0, 1, ..., g-2, g) on the canonical series.
VanishingSeq weierstrass(int g) {
  std::vector<int> a;
  for (int i = 0; i <= g - 2; ++i) a.push_back(i);
  a.push_back(g);
  return VanishingSeq(a);
}

void BM_PointedCount(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const BNInput p{g, g - 1, 2 * g - 2};
  const VanishingSeq a = weierstrass(g);
  for (auto _ : state) benchmark::DoNotOptimize(pointed_count(p, a));
}
BENCHMARK(BM_PointedCount)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_PointedViaDet(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const BNInput p{g, g - 1, 2 * g - 2};
  const VanishingSeq a = weierstrass(g);
  for (auto _ : state) benchmark::DoNotOptimize(pointed_via_det(p, a));
}
BENCHMARK(BM_PointedViaDet)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_PointedViaSym(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const BNInput p{g, g - 1, 2 * g - 2};
  const VanishingSeq a = weierstrass(g);
  for (auto _ : state) benchmark::DoNotOptimize(pointed_via_sym(p, a));
}
BENCHMARK(BM_PointedViaSym)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SurfaceIntersection(benchmark::State& state) {
  const BNInput p{10, 2, 8};
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(surface_intersection(i, p).value);
}
BENCHMARK(BM_SurfaceIntersection)->DenseRange(2, 8)->Unit(benchmark::kMicrosecond);

void BM_PencilCount(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pencil_count(g, g));
}
BENCHMARK(BM_PencilCount)->Arg(10)->Arg(30)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
