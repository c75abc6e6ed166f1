#include "covering/coverage.hpp"
#include "covering/search.hpp"
#include "covering/system_io.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

using namespace covering;
using namespace covering::search;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

// Every property a returned system must have, checked from scratch.
void expect_valid(const SearchConfig& config, const SearchOutcome& outcome) {
  ASSERT_EQ(outcome.status, SearchStatus::found);
  ASSERT_TRUE(outcome.found);
  const auto& s = *outcome.found;
  std::vector<oracle::Class> raw;
  std::set<BigInt> moduli;
  std::set<std::pair<BigInt, BigInt>> classes;
  for (const auto& c : s.classes()) {
    raw.push_back({c.residue().get_si(), c.modulus().get_si()});
    EXPECT_NE(std::find(config.modulus_pool.begin(), config.modulus_pool.end(), c.modulus()),
              config.modulus_pool.end());
    EXPECT_TRUE(classes.insert({c.residue(), c.modulus()}).second) << "repeated class";
    const bool fresh = moduli.insert(c.modulus()).second;
    if (config.single_use()) EXPECT_TRUE(fresh);
    if (config.require_odd) EXPECT_TRUE(mpz_odd_p(c.modulus().get_mpz_t()));
  }
  EXPECT_LE(s.size(), config.max_classes);
  EXPECT_FALSE(oracle::coverage(raw).smallest_gap);
}

}  // namespace

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors_gt_one(12), ints({2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors_gt_one(1), ints({}));
  EXPECT_EQ(divisors_gt_one(105), ints({3, 5, 7, 15, 21, 35, 105}));
  for (long n = 1; n < 500; ++n) {
    std::vector<BigInt> want;
    for (long d = 2; d <= n; ++d) {
      if (n % d == 0) want.emplace_back(d);
    }
    ASSERT_EQ(divisors_gt_one(n), want) << n;
  }
}

TEST(SearchConfig, Validation) {
  SearchConfig c;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.modulus_pool = ints({1, 2});
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.modulus_pool = ints({2});
  c.max_classes = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.max_classes = 2;
  EXPECT_NO_THROW(c.validate());
  EXPECT_THROW(search_cover(SearchConfig{}), std::invalid_argument);
}

TEST(SearchCover, TwoHalves) {
  SearchConfig c;
  c.modulus_pool = ints({2});
  c.max_classes = 2;
  const auto out = search_cover(c);
  expect_valid(c, out);
  EXPECT_EQ(format_system(*out.found), "0 2\n1 2\n");

  c.require_distinct = true;
  EXPECT_EQ(search_cover(c).status, SearchStatus::none);
}

TEST(SearchCover, DensityPruneAtRoot) {
  SearchConfig c;
  c.modulus_pool = ints({3, 5, 15});
  c.require_distinct = true;
  const auto out = search_cover(c);
  EXPECT_EQ(out.status, SearchStatus::none);
  EXPECT_FALSE(out.found);
  EXPECT_GE(out.prune_stats.density, 1u);
  EXPECT_LE(out.nodes_explored, 1u);
}

TEST(SearchCover, FindsDistinctCoverOf12) {
  SearchConfig c;
  c.modulus_pool = divisors_gt_one(12);
  c.require_distinct = true;
  const auto out = search_cover(c);
  expect_valid(c, out);
  EXPECT_EQ(out.found->lcm(), 12);
}

TEST(SearchCover, OddFilterEmptiesPool) {
  SearchConfig c;
  c.modulus_pool = ints({2, 4, 8});
  c.require_odd = true;
  EXPECT_EQ(search_cover(c).status, SearchStatus::none);
}

TEST(SearchCover, ClassLimit) {
  SearchConfig c;
  c.modulus_pool = divisors_gt_one(12);
  c.require_distinct = true;
  c.max_classes = 4;  // the smallest distinct cover from these moduli needs 5
  const auto out = search_cover(c);
  EXPECT_EQ(out.status, SearchStatus::none);
  EXPECT_FALSE(oracle::exists_distinct_cover({2, 3, 4, 6, 12}, 4));
}

TEST(SearchCover, BudgetExhaustion) {
  SearchConfig c;
  c.modulus_pool = divisors_gt_one(3 * 5 * 7 * 11 * 13);
  c.require_distinct = true;
  c.node_budget = 3;
  const auto out = search_cover(c);
  EXPECT_EQ(out.status, SearchStatus::budget_exhausted);
  EXPECT_FALSE(out.found);
  EXPECT_LE(out.nodes_explored, 4u);
}

TEST(SearchCover, Deterministic) {
  SearchConfig c;
  c.modulus_pool = divisors_gt_one(36);
  c.max_classes = 6;
  const auto a = search_cover(c);
  const auto b = search_cover(c);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
  ASSERT_EQ(a.found.has_value(), b.found.has_value());
  if (a.found) EXPECT_EQ(*a.found, *b.found);
}

// Random small pools against exhaustive enumeration, both engines.
TEST(SearchCover, AgreesWithBruteForce) {
  std::mt19937_64 rng(41);
  const std::vector<std::int64_t> bases{12, 18, 20, 24, 30, 36, 45};
  int found = 0, none = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::int64_t base = bases[rng() % bases.size()];
    std::vector<std::int64_t> pool;
    for (std::int64_t d = 2; d <= base; ++d) {
      if (base % d == 0 && rng() % 3 != 0) pool.push_back(d);
    }
    if (pool.empty()) continue;
    const bool distinct = rng() % 2 == 0;
    const std::size_t max_classes = 2 + rng() % 5;
    std::int64_t total_classes = 0;
    for (auto n : pool) total_classes += n;
    if (!distinct && total_classes > 40) continue;

    const bool truth = distinct ? oracle::exists_distinct_cover(pool, max_classes)
                                : oracle::exists_multi_cover(pool, max_classes);

    for (auto engine : {SearchEngine::bitset, SearchEngine::split}) {
      SearchConfig c;
      c.modulus_pool.assign(pool.begin(), pool.end());
      c.require_distinct = distinct;
      c.max_classes = max_classes;
      c.engine = engine;
      const auto out = search_cover(c);
      ASSERT_NE(out.status, SearchStatus::budget_exhausted);
      ASSERT_EQ(out.status == SearchStatus::found, truth)
          << "base " << base << " distinct " << distinct << " k " << max_classes;
      EXPECT_EQ(out.engine_used, engine);
      if (truth) expect_valid(c, out);
    }
    (truth ? found : none)++;
  }
  EXPECT_GT(found, 10);
  EXPECT_GT(none, 10);
}

TEST(SearchCover, OneClassPerModulusWithoutDistinct) {
  SearchConfig c;
  c.modulus_pool = ints({2, 3, 4, 6, 12});
  c.one_class_per_modulus = true;
  EXPECT_TRUE(c.single_use());
  const auto out = search_cover(c);
  expect_valid(c, out);
}

TEST(NonexistenceScan, SmallOddN) {
  const auto entries = nonexistence_scan(ints({1, 9, 15, 105, 315}));
  ASSERT_EQ(entries.size(), 5u);
  for (const auto& e : entries) EXPECT_EQ(e.outcome.status, SearchStatus::none) << e.n.get_si();
  EXPECT_TRUE(entries[0].squarefree);
  EXPECT_FALSE(entries[1].squarefree);
  EXPECT_TRUE(entries[3].squarefree);
  EXPECT_FALSE(entries[4].squarefree);
  EXPECT_THROW(nonexistence_scan(ints({12})), std::invalid_argument);
}

TEST(NonexistenceScan, FiveOddPrimes) {
  // 3*5*7*11*13: density alone does not settle it; the prunes must.
  const auto entries = nonexistence_scan(ints({15015}));
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].outcome.status, SearchStatus::none);
}

TEST(WriteOutcome, Trailer) {
  SearchConfig c;
  c.modulus_pool = ints({2});
  c.max_classes = 2;
  std::ostringstream out;
  write_outcome(out, search_cover(c));
  const auto text = out.str();
  EXPECT_EQ(text.rfind("0 2\n1 2\n", 0), 0u);
  EXPECT_NE(text.find("# status: found"), std::string::npos);
  EXPECT_NE(text.find("# nodes_explored:"), std::string::npos);
  // Trailer is comment-only, so the output parses back as the system.
  EXPECT_EQ(parse_system(text).size(), 2u);
}
