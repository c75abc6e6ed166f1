#include "covering/search.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace covering::search {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

void SearchConfig::validate() const {
  if (modulus_pool.empty()) throw std::invalid_argument("search: modulus pool is empty");
  for (const auto& n : modulus_pool) {
    if (n <= 1) throw std::invalid_argument("search: pool modulus " + to_string(n) + " is not > 1");
  }
  if (max_classes == 0) throw std::invalid_argument("search: max_classes must be >= 1");
}

std::vector<BigInt> divisors_gt_one(const BigInt& n) {
  std::vector<BigInt> divisors{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divisors.size();
    BigInt power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(divisors.begin());
  return divisors;
}

namespace {

struct BudgetExceeded {};

// Pool after filtering: ascending, deduplicated, odd-only when required.
std::vector<BigInt> effective_pool(const SearchConfig& config) {
  std::set<BigInt> pool;
  for (const auto& n : config.modulus_pool) {
    if (config.require_odd && mpz_even_p(n.get_mpz_t())) continue;
    pool.insert(n);
  }
  return {pool.begin(), pool.end()};
}

class BitsetSearch {
 public:
  BitsetSearch(const SearchConfig& config, const std::vector<BigInt>& pool)
      : config_(config), single_use_(config.single_use()) {
    for (const auto& n : pool) pool_.push_back(to_u64(n));
    period_ = to_u64(lcm_list(pool));
    counts_.assign(period_, 0);
    uncovered_ = period_;
    uses_.assign(pool_.size(), 0);
    forbidden_.resize(pool_.size());
    std::size_t total = 0;
    for (auto n : pool_) {
      pool32_.push_back(static_cast<std::uint32_t>(n));
      offset_.push_back(total);
      total += n;
    }
    hits_.resize(total);
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      const auto per_class = static_cast<std::uint32_t>(period_ / pool_[i]);
      std::fill_n(hits_.begin() + static_cast<std::ptrdiff_t>(offset_[i]), pool_[i], per_class);
    }
  }

  SearchOutcome run() {
    SearchOutcome outcome;
    outcome.engine_used = SearchEngine::bitset;
    try {
      outcome.status = descend(0) ? SearchStatus::found : SearchStatus::none;
    } catch (const BudgetExceeded&) {
      outcome.status = SearchStatus::budget_exhausted;
    }
    outcome.nodes_explored = nodes_;
    outcome.prune_stats = stats_;
    if (outcome.status == SearchStatus::found) {
      std::vector<ResidueClass> classes;
      for (const auto& [a, n] : chosen_) classes.emplace_back(from_u64(a), from_u64(n));
      outcome.found = CoveringSystem(std::move(classes));
    }
    return outcome;
  }

 private:
  // period_ <= 2^24, so 32-bit division suffices.
  template <int Delta>
  void bump(std::uint32_t x) {
    for (std::size_t i = 0; i < pool32_.size(); ++i) hits_[offset_[i] + x % pool32_[i]] += Delta;
  }

  void place(std::uint64_t a, std::uint64_t n) {
    for (std::uint64_t x = a; x < period_; x += n) {
      if (counts_[x]++ == 0) {
        --uncovered_;
        bump<-1>(static_cast<std::uint32_t>(x));
      }
    }
  }

  void unplace(std::uint64_t a, std::uint64_t n) {
    for (std::uint64_t x = a; x < period_; x += n) {
      if (--counts_[x] == 0) {
        ++uncovered_;
        bump<+1>(static_cast<std::uint32_t>(x));
      }
    }
  }

  // Upper bound, in units of 1/period, on what the remaining slots can add.
  std::uint64_t capacity(std::size_t slots) const {
    std::uint64_t units = 0;
    for (std::size_t i = 0; i < pool_.size() && slots > 0; ++i) {
      const std::uint64_t avail = single_use_ ? (uses_[i] == 0 ? 1 : 0) : pool_[i] - uses_[i];
      const std::uint64_t take = std::min<std::uint64_t>(avail, slots);
      units += take * (period_ / pool_[i]);
      slots -= take;
    }
    return units;
  }

  bool forbidden(std::size_t i, std::uint64_t a) const {
    const auto& f = forbidden_[i];
    return std::find(f.begin(), f.end(), a) != f.end();
  }

  // Upper bound on the uncovered residues the remaining slots can reach:
  // each available class counts only the uncovered points it contains.
  std::uint64_t reachable(std::size_t slots) {
    best_.clear();
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (single_use_ && uses_[i] != 0) continue;
      const std::uint32_t* row = hits_.data() + offset_[i];
      std::uint64_t top = 0;
      for (std::uint64_t a = 0; a < pool_[i]; ++a) {
        if (row[a] == 0 || forbidden(i, a)) continue;
        if (single_use_) {
          top = std::max<std::uint64_t>(top, row[a]);
        } else {
          best_.push_back(row[a]);
        }
      }
      if (single_use_) best_.push_back(top);
    }
    const std::size_t take = std::min(slots, best_.size());
    std::partial_sort(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(take), best_.end(),
                      std::greater<>());
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < take; ++k) total += best_[k];
    return total;
  }

  bool descend(std::uint64_t from) {
    if (++nodes_ > config_.node_budget) throw BudgetExceeded{};
    if (uncovered_ == 0) return true;

    std::uint64_t witness = from;
    while (counts_[witness] != 0) ++witness;

    const std::size_t slots = config_.max_classes - chosen_.size();
    if (slots == 0) {
      ++stats_.class_limit;
      return false;
    }
    if (capacity(slots) < uncovered_) {
      ++stats_.density;
      return false;
    }
    if (reachable(slots) < uncovered_) {
      ++stats_.capacity;
      return false;
    }

    bool branched = false;
    std::vector<std::size_t> tried;
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (single_use_ && uses_[i] != 0) continue;
      const std::uint64_t n = pool_[i];
      const std::uint64_t a = witness % n;
      if (forbidden(i, a)) continue;
      branched = true;
      place(a, n);
      ++uses_[i];
      chosen_.emplace_back(a, n);
      const bool done = descend(witness + 1);
      if (done) return true;
      chosen_.pop_back();
      --uses_[i];
      unplace(a, n);
      forbidden_[i].push_back(a);
      tried.push_back(i);
    }
    for (auto i : tried) forbidden_[i].pop_back();
    if (!branched) ++stats_.dead_end;
    return false;
  }

  const SearchConfig& config_;
  bool single_use_;
  std::vector<std::uint64_t> pool_;
  std::uint64_t period_ = 1;
  std::vector<std::uint32_t> counts_;
  std::uint64_t uncovered_ = 0;
  std::vector<std::uint64_t> uses_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chosen_;
  std::vector<std::vector<std::uint64_t>> forbidden_;
  // hits_[offset_[i] + a]: uncovered points of one period in class a (mod pool_[i]).
  std::vector<std::uint32_t> hits_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> pool32_;
  std::vector<std::uint64_t> best_;
  std::uint64_t nodes_ = 0;
  PruneStats stats_;
};

class SplitWitnessSearch {
 public:
  SplitWitnessSearch(const SearchConfig& config, std::vector<BigInt> pool)
      : config_(config), single_use_(config.single_use()), pool_(std::move(pool)) {
    uses_.assign(pool_.size(), 0);
  }

  SearchOutcome run() {
    SearchOutcome outcome;
    outcome.engine_used = SearchEngine::split;
    try {
      outcome.status = descend() ? SearchStatus::found : SearchStatus::none;
    } catch (const BudgetExceeded&) {
      outcome.status = SearchStatus::budget_exhausted;
    }
    outcome.nodes_explored = nodes_;
    outcome.prune_stats = stats_;
    if (outcome.status == SearchStatus::found) outcome.found = CoveringSystem(chosen_);
    return outcome;
  }

 private:
  Rational capacity(std::size_t slots) const {
    Rational total;
    for (std::size_t i = 0; i < pool_.size() && slots > 0; ++i) {
      BigInt avail = single_use_ ? BigInt(uses_[i] == 0 ? 1 : 0) : BigInt(pool_[i] - uses_[i]);
      if (avail > slots) avail = from_u64(slots);
      total += Rational(avail, pool_[i]);
      slots -= to_u64(avail);
    }
    return total;
  }

  bool descend() {
    if (++nodes_ > config_.node_budget) throw BudgetExceeded{};
    const CoveringSystem current(chosen_);
    const auto witness = find_witness_split(current);
    if (!witness) return true;

    const std::size_t slots = config_.max_classes - chosen_.size();
    if (slots == 0) {
      ++stats_.class_limit;
      return false;
    }
    const Rational uncovered = Rational(1) - covers(current).density_covered;
    if (capacity(slots) < uncovered) {
      ++stats_.density;
      return false;
    }

    bool branched = false;
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (single_use_ && uses_[i] != 0) continue;
      branched = true;
      ++uses_[i];
      chosen_.emplace_back(*witness, pool_[i]);
      if (descend()) return true;
      chosen_.pop_back();
      --uses_[i];
    }
    if (!branched) ++stats_.dead_end;
    return false;
  }

  const SearchConfig& config_;
  bool single_use_;
  std::vector<BigInt> pool_;
  std::vector<std::uint64_t> uses_;
  std::vector<ResidueClass> chosen_;
  std::uint64_t nodes_ = 0;
  PruneStats stats_;
};

CoveringSystem canonical_order(const CoveringSystem& system) {
  auto classes = system.classes();
  std::sort(classes.begin(), classes.end(), [](const ResidueClass& x, const ResidueClass& y) {
    return x.modulus() != y.modulus() ? x.modulus() < y.modulus() : x.residue() < y.residue();
  });
  return CoveringSystem(std::move(classes));
}

void reverify(const SearchConfig& config, const std::vector<BigInt>& pool, const CoveringSystem& system) {
  auto fail = [](const std::string& why) {
    throw std::logic_error("search produced an invalid certificate: " + why);
  };
  if (!covers(system).covers) fail("system does not cover");
  if (system.size() > config.max_classes) fail("too many classes");
  const auto flags = predicates(system);
  if (config.single_use() && !flags.distinct_moduli) fail("moduli repeat");
  if (config.require_odd && !flags.all_moduli_odd) fail("even modulus");
  if (!flags.all_moduli_gt_one) fail("modulus 1");
  std::set<std::pair<BigInt, BigInt>> seen;
  for (const auto& c : system.classes()) {
    if (!std::binary_search(pool.begin(), pool.end(), c.modulus())) fail("modulus outside pool");
    if (!seen.insert({c.residue(), c.modulus()}).second) fail("repeated class");
  }
}

}  // namespace

SearchOutcome search_cover(const SearchConfig& config) {
  config.validate();
  const auto pool = effective_pool(config);
  if (pool.empty()) {
    SearchOutcome outcome;
    outcome.status = SearchStatus::none;
    outcome.nodes_explored = 1;
    outcome.prune_stats.dead_end = 1;
    return outcome;
  }

  SearchEngine engine = config.engine;
  if (engine == SearchEngine::automatic) {
    engine = lcm_list(pool) <= from_u64(kDefaultScanThreshold) ? SearchEngine::bitset
                                                                : SearchEngine::split;
  }
  if (engine == SearchEngine::bitset && lcm_list(pool) > from_u64(kDefaultScanThreshold)) {
    throw CapacityError("search: bitset engine needs lcm(pool) <= " +
                        std::to_string(kDefaultScanThreshold) + "; use the split engine");
  }

  SearchOutcome outcome =
      engine == SearchEngine::bitset ? BitsetSearch(config, pool).run() : SplitWitnessSearch(config, pool).run();
  if (outcome.found) {
    outcome.found = canonical_order(*outcome.found);
    reverify(config, pool, *outcome.found);
  }
  return outcome;
}

std::vector<ScanEntry> nonexistence_scan(std::span<const BigInt> n_values, std::uint64_t node_budget) {
  std::vector<ScanEntry> entries;
  entries.reserve(n_values.size());
  for (const auto& n : n_values) {
    if (n < 1 || mpz_even_p(n.get_mpz_t())) {
      throw std::invalid_argument("nonexistence_scan: n = " + to_string(n) + " is not a positive odd integer");
    }
    ScanEntry entry;
    entry.n = n;
    entry.squarefree = is_squarefree(n);
    const auto divisors = divisors_gt_one(n);
    if (divisors.empty()) {
      // n = 1: nothing to choose from, nothing covers.
      entry.outcome.status = SearchStatus::none;
      entry.outcome.nodes_explored = 1;
      entry.outcome.prune_stats.dead_end = 1;
    } else {
      SearchConfig config;
      config.modulus_pool = divisors;
      config.require_distinct = true;
      config.require_odd = true;
      config.node_budget = node_budget;
      entry.outcome = search_cover(config);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_outcome(std::ostream& out, const SearchOutcome& outcome) {
  if (outcome.found) {
    for (const auto& c : outcome.found->classes()) {
      out << to_string(c.residue()) << ' ' << to_string(c.modulus()) << '\n';
    }
  }
  out << "# status: " << status_name(outcome.status) << '\n'
      << "# engine: " << (outcome.engine_used == SearchEngine::bitset ? "bitset" : "split") << '\n'
      << "# nodes_explored: " << outcome.nodes_explored << '\n'
      << "# prune_density: " << outcome.prune_stats.density << '\n'
      << "# prune_class_limit: " << outcome.prune_stats.class_limit << '\n'
      << "# prune_capacity: " << outcome.prune_stats.capacity << '\n'
      << "# dead_ends: " << outcome.prune_stats.dead_end << '\n';
}

}  // namespace covering::search
