#include "covering/coverage.hpp"
#include "covering/examples.hpp"

#include <benchmark/benchmark.h>

using namespace covering;

namespace {

// Partition of Z into the classes i (mod n) for i < n-1 plus everything but
// one residue mod 2n: lcm 2n, n classes, just short of covering.
CoveringSystem near_cover(long n) {
  std::vector<std::pair<BigInt, BigInt>> raw;
  for (long i = 0; i + 1 < n; ++i) raw.emplace_back(i, n);
  raw.emplace_back(n - 1, 2 * n);
  return normalize(raw);
}

void BM_ScanErdos14(benchmark::State& state) {
  const auto s = examples::erdos14();
  for (auto _ : state) benchmark::DoNotOptimize(covers_scan(s));
}
BENCHMARK(BM_ScanErdos14);

void BM_IeErdos14(benchmark::State& state) {
  const auto s = examples::erdos14();
  for (auto _ : state) benchmark::DoNotOptimize(density_inclusion_exclusion(s));
}
BENCHMARK(BM_IeErdos14);

void BM_SplitErdos14(benchmark::State& state) {
  const auto s = examples::erdos14();
  for (auto _ : state) benchmark::DoNotOptimize(find_witness_split(s));
}
BENCHMARK(BM_SplitErdos14);

void BM_ScanLargePeriod(benchmark::State& state) {
  const auto s = near_cover(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(covers_scan(s));
}
BENCHMARK(BM_ScanLargePeriod)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

// Same-modulus classes are pairwise disjoint, so this times subtree skipping.
void BM_IeClasses(benchmark::State& state) {
  const auto s = near_cover(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(density_inclusion_exclusion(s, 32));
}
BENCHMARK(BM_IeClasses)->DenseRange(8, 20, 4);

}  // namespace
