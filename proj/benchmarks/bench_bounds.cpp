#include "covering/bounds.hpp"

#include <benchmark/benchmark.h>

using namespace covering;

namespace {

void BM_ExpandF(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const auto p = bounds::build_profile(r);
  for (auto _ : state) benchmark::DoNotOptimize(bounds::expand_f(r, p.d));
}
BENCHMARK(BM_ExpandF)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_BoundTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bounds::bound_table(1, 25));
}
BENCHMARK(BM_BoundTable)->Unit(benchmark::kMillisecond);

}  // namespace
