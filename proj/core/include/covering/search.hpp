#pragma once

#include "covering/coverage.hpp"
#include "covering/residue.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace covering::search {

inline constexpr std::size_t kUnlimitedClasses = std::numeric_limits<std::size_t>::max();
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class SearchEngine {
  automatic,  // bitset when lcm(pool) fits the scan threshold, else split
  bitset,     // coverage counts over one period of lcm(pool)
  split,      // witnesses from find_witness_split, densities from covers()
};

struct SearchConfig {
  std::vector<BigInt> modulus_pool;
  bool require_distinct = false;
  bool require_odd = false;
  std::size_t max_classes = kUnlimitedClasses;
  /// Defaults to require_distinct when unset.
  std::optional<bool> one_class_per_modulus;
  std::uint64_t node_budget = kDefaultNodeBudget;
  SearchEngine engine = SearchEngine::automatic;

  bool single_use() const { return require_distinct || one_class_per_modulus.value_or(false); }

  /// Throws std::invalid_argument if the pool is empty, contains a modulus
  /// <= 1, or max_classes == 0.
  void validate() const;
};

enum class SearchStatus {
  found,
  none,              // search space exhausted: no cover exists in this pool
  budget_exhausted,  // gave up; nothing proved
};

std::string_view status_name(SearchStatus s);

struct PruneStats {
  std::uint64_t density = 0;      // remaining class densities < uncovered density
  std::uint64_t class_limit = 0;  // max_classes reached while uncovered
  std::uint64_t capacity = 0;     // best-class uncovered counts < uncovered count
  std::uint64_t dead_end = 0;     // no allowed class contains the witness
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::none;
  std::optional<CoveringSystem> found;  // sorted by modulus, then residue
  std::uint64_t nodes_explored = 0;
  PruneStats prune_stats;
  SearchEngine engine_used = SearchEngine::bitset;
};

/// Divisors of n strictly greater than 1, ascending.
std::vector<BigInt> divisors_gt_one(const BigInt& n);

/// Depth-first search for a covering system drawn from the pool. Each node
/// branches on the classes (ascending modulus) that contain the current
/// uncovered witness; a class whose branch failed is excluded from the
/// subtrees of its later siblings. A found system is re-verified with
/// covers() and against the config before it is returned.
SearchOutcome search_cover(const SearchConfig& config);

struct ScanEntry {
  BigInt n;
  bool squarefree = false;
  SearchOutcome outcome;
};

/// For each odd n, searches pool = divisors_gt_one(n) with distinct odd
/// moduli. Throws std::invalid_argument on an even n.
std::vector<ScanEntry> nonexistence_scan(std::span<const BigInt> n_values,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Writes the found system (if any) in the text format followed by a '#'
/// statistics trailer.
void write_outcome(std::ostream& out, const SearchOutcome& outcome);

}  // namespace covering::search
