// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails (including its time limit).

#include "covering/bounds.hpp"
#include "covering/coverage.hpp"
#include "covering/examples.hpp"
#include "covering/search.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace covering;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < limit_s, "time limit " + std::to_string(limit_s) + "s exceeded");
  if (!c.ok) ++failures;
  std::printf("[%s] %d %s (%.3fs / %.0fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              c.detail.empty() ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
}

std::vector<std::size_t> schedule(std::size_t r) {
  std::vector<std::size_t> d;
  for (std::size_t t = 1; t <= r; ++t) d.push_back(bounds::schedule_d(t));
  return d;
}

CoveringSystem from_oracle(const std::vector<oracle::Class>& raw) {
  std::vector<std::pair<BigInt, BigInt>> pairs;
  for (const auto& [a, n] : raw) pairs.emplace_back(a, n);
  return normalize(pairs);
}

}  // namespace

int main() {
  criterion(1, "Erdos 5-class system: all methods cover, lcm 12, dropping 7(12) leaves witness 7", 1.0, [](Check& c) {
    const auto s = examples::erdos5();
    c.require(s.lcm() == 12, "lcm != 12");
    for (auto m : {CoverageMethod::scan, CoverageMethod::inclusion_exclusion, CoverageMethod::split}) {
      c.require(covers_with(s, m).covers, std::string(method_name(m)) + " says not covering");
    }
    const auto dropped = s.without(4);
    const auto r = covers_with(dropped, CoverageMethod::scan);
    c.require(!r.covers && r.witness == BigInt(7), "scan witness != 7");
    c.require(find_witness_split(dropped) == BigInt(7), "split witness != 7");
    c.require(density_inclusion_exclusion(dropped) < Rational(1), "ie density is 1");
  });

  criterion(2, "Erdos 14-class system: covers, lcm 210, distinct moduli, square-free lcm, scan == IE", 5.0, [](Check& c) {
    const auto s = examples::erdos14();
    const auto scan = covers_scan(s);
    const auto ie = density_inclusion_exclusion(s);
    c.require(scan.covers, "scan: not covering");
    c.require(s.lcm() == 210, "lcm != 210");
    const auto flags = predicates(s);
    c.require(flags.distinct_moduli, "moduli not distinct");
    c.require(flags.lcm_squarefree, "lcm not square-free");
    c.require(ie == scan.density_covered && ie == Rational(1), "scan and IE disagree");
    c.require(!find_witness_split(s), "split found a witness");
  });

  criterion(3, "bound_table r=21: 1.995 <= v < 1.996", 1.0, [](Check& c) {
    const auto rows = bounds::bound_table(21, 21);
    const auto& v = rows.at(0).value;
    c.require(v >= Rational(BigInt(1995), BigInt(1000)) && v < Rational(BigInt(1996), BigInt(1000)),
              "v = " + v.decimal(6));
    std::printf("      r=21: %s = %s\n", v.str().c_str(), v.decimal(6).c_str());
  });

  criterion(4, "expand_f nonnegative for r <= 16; matches eval_f at 200 random points for r <= 12", 60.0, [](Check& c) {
    for (std::size_t r = 1; r <= 16; ++r) {
      const auto check = bounds::check_nonneg(bounds::expand_f(r, schedule(r)));
      c.require(check.nonnegative, "negative coefficient at r=" + std::to_string(r));
    }
    std::mt19937_64 rng(12345);
    for (std::size_t r = 1; r <= 12; ++r) {
      const auto d = schedule(r);
      const auto poly = bounds::expand_f(r, d);
      for (int i = 0; i < 200; ++i) {
        std::vector<Rational> x;
        for (std::size_t t = 0; t < r; ++t) {
          x.emplace_back(BigInt(static_cast<long>(rng() % 21) - 10), BigInt(static_cast<long>(1 + rng() % 50)));
        }
        c.require(poly.evaluate(x) == bounds::eval_f(x, d), "mismatch at r=" + std::to_string(r));
      }
    }
  });

  criterion(5, "bff_squarefree minimal r over 1..15 is 11, unsatisfied for r <= 10", 1.0, [](Check& c) {
    c.require(bounds::minimal_squarefree_r(15) == std::optional<std::size_t>(11), "minimal r != 11");
    for (std::size_t r = 1; r <= 10; ++r) {
      c.require(!bounds::bff_squarefree(odd_primes(r)).satisfied, "satisfied at r=" + std::to_string(r));
    }
    c.require(bounds::bff_squarefree(odd_primes(11)).satisfied, "unsatisfied at r=11");
  });

  criterion(6, "500+ random systems (lcm <= 1e5, k <= 12): methods agree, density in [0,1], witnesses uncovered", 120.0, [](Check& c) {
    std::mt19937_64 rng(2024);
    const std::vector<std::int64_t> periods{12, 60, 360, 2520, 5040, 27720, 55440, 65520, 83160, 98280, 30030, 4096};
    const std::vector<std::int64_t> primes{2, 3, 5, 7};
    int tested = 0, covering = 0;
    for (int i = 0; i < 800; ++i) {
      auto raw = i % 4 == 3 ? oracle::random_partition(rng, 12, primes, 100000)
                            : oracle::random_system(rng, 12, periods[rng() % periods.size()]);
      if (i % 8 == 7 && !raw.empty()) raw.pop_back();
      const auto s = from_oracle(raw);
      if (s.lcm() > 100000 || s.size() > 12) continue;
      ++tested;
      const auto scan = covers_scan(s);
      const auto ie = density_inclusion_exclusion(s);
      const auto split_w = find_witness_split(s);
      const auto split_d = density_split(s);
      const std::string tag = " (system #" + std::to_string(i) + ")";
      c.require(scan.covers == (ie == Rational(1)), "scan vs IE cover mismatch" + tag);
      c.require(scan.covers == !split_w, "scan vs split cover mismatch" + tag);
      c.require(scan.density_covered == ie && ie == split_d, "density mismatch" + tag);
      c.require(ie >= Rational(0) && ie <= Rational(1), "density out of range" + tag);
      if (scan.witness) c.require(multiplicity(s, *scan.witness) == 0, "scan witness covered" + tag);
      if (split_w) {
        c.require(multiplicity(s, *split_w) == 0, "split witness covered" + tag);
        c.require(*split_w >= 0 && *split_w < s.lcm(), "split witness out of range" + tag);
      }
      covering += scan.covers ? 1 : 0;
    }
    c.require(tested >= 500, "only " + std::to_string(tested) + " systems tested");
    std::printf("      %d systems, %d covering\n", tested, covering);
  });

  criterion(7, "nonexistence_scan over odd square-free n < 10^4 finds no cover", 600.0, [](Check& c) {
    std::vector<BigInt> ns;
    for (long n = 1; n < 10000; n += 2) {
      if (is_squarefree(n)) ns.emplace_back(n);
    }
    const auto entries = search::nonexistence_scan(ns);
    std::size_t none = 0, exhausted = 0, found = 0;
    std::uint64_t nodes = 0;
    for (const auto& e : entries) {
      nodes += e.outcome.nodes_explored;
      switch (e.outcome.status) {
        case search::SearchStatus::none: ++none; break;
        case search::SearchStatus::found:
          ++found;
          c.require(false, "cover found for n=" + to_string(e.n));
          break;
        case search::SearchStatus::budget_exhausted:
          ++exhausted;
          c.require(false, "budget exhausted for n=" + to_string(e.n));
          break;
      }
    }
    std::printf("      %zu values: none=%zu found=%zu budget_exhausted=%zu nodes=%llu\n", entries.size(), none, found,
                exhausted, static_cast<unsigned long long>(nodes));
  });

  criterion(8, "bound_table r=1..25 exact; r=22 reported", 5.0, [](Check& c) {
    const auto rows = bounds::bound_table(1, 25);
    c.require(rows.size() == 25, "wrong row count");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto p = bounds::build_profile(i + 1);
      c.require(rows[i].r == i + 1, "row order");
      c.require(rows[i].value == bounds::eval_f(p.x, p.d), "row " + std::to_string(i + 1) + " != eval_f");
      c.require(rows[i].meets_two == (rows[i].value >= Rational(2)), "meets_two flag");
    }
    c.require(rows[20].value == Rational(BigInt("95237487894517051871"), BigInt("47728278108474163200")),
              "r=21 exact value");
    const auto& v22 = rows.at(21).value;
    std::printf("      r=22: %s = %s (meets 2: %s)\n", v22.str().c_str(), v22.decimal(6).c_str(),
                rows[21].meets_two ? "yes" : "no");
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
