#include <benchmark/benchmark.h>

#include <numeric>

#include "bncount/numeric_core.hpp"

namespace {

using namespace bncount;

std::vector<int> spread(int length) {
  std::vector<int> b(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) b[static_cast<std::size_t>(i)] = 2 * i + 1;
  return b;
}

void BM_FactorialDet(benchmark::State& state) {
  const auto b = spread(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factorial_det(b));
}
BENCHMARK(BM_FactorialDet)->DenseRange(2, 8, 2);

void BM_FactorialDetClosedForm(benchmark::State& state) {
  const auto b = spread(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factorial_det_closed_form(b));
}
BENCHMARK(BM_FactorialDetClosedForm)->DenseRange(2, 8, 2);

void BM_Factorial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorial(n));
}
BENCHMARK(BM_Factorial)->Arg(20)->Arg(200)->Arg(1000);

void BM_ElementarySymmetric(benchmark::State& state) {
  std::vector<int> values(static_cast<std::size_t>(state.range(0)));
  std::iota(values.begin(), values.end(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(elementary_symmetric(values, 4));
}
BENCHMARK(BM_ElementarySymmetric)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
