#include "covering/search.hpp"

#include <benchmark/benchmark.h>

using namespace covering;

namespace {

void BM_SearchDistinct(benchmark::State& state) {
  search::SearchConfig c;
  c.modulus_pool = search::divisors_gt_one(state.range(0));
  c.require_distinct = true;
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = search::search_cover(c).nodes_explored;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchDistinct)->Arg(12)->Arg(120)->Arg(360)->Unit(benchmark::kMillisecond);

// 3*5*7*11*13 with both engines; the hardest instance the tests run.
void BM_OddNonexistence(benchmark::State& state) {
  search::SearchConfig c;
  c.modulus_pool = search::divisors_gt_one(15015);
  c.require_distinct = true;
  c.require_odd = true;
  c.engine = static_cast<search::SearchEngine>(state.range(0));
  c.node_budget = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(search::search_cover(c));
}
BENCHMARK(BM_OddNonexistence)
    ->Arg(static_cast<int>(search::SearchEngine::bitset))
    ->Arg(static_cast<int>(search::SearchEngine::split))
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace
