#pragma once

#include "covering/rational.hpp"
#include "covering/residue.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace covering {

enum class CoverageMethod { scan, inclusion_exclusion, split };

std::string_view method_name(CoverageMethod m);

/// Raised when a method is asked to run beyond its capacity (scan length or
/// subset count). The message names the limit and suggests another method.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoverageReport {
  bool covers = false;
  /// Some uncovered integer in [0, lcm) when covers is false and the method
  /// produces one. The scan method always returns the smallest.
  std::optional<BigInt> witness;
  CoverageMethod method = CoverageMethod::scan;
  Rational density_covered;
};

inline constexpr std::uint64_t kDefaultScanThreshold = std::uint64_t{1} << 24;
inline constexpr std::size_t kMaxInclusionExclusionClasses = 24;

/// Marks every class over a bit array of one period. Requires
/// lcm <= threshold, otherwise throws CapacityError.
CoverageReport covers_scan(const CoveringSystem& system,
                           std::uint64_t threshold = kDefaultScanThreshold);

/// Exact density of the union by inclusion-exclusion over all nonempty
/// subsets of classes, with incompatible subsets (and all their supersets)
/// skipped. Throws CapacityError when the system has more than max_classes
/// classes.
Rational density_inclusion_exclusion(const CoveringSystem& system,
                                     std::size_t max_classes = kMaxInclusionExclusionClasses);

/// Residue-tree search: split on the smallest prime p dividing a modulus,
/// recurse into each residue mod p with the induced subsystem. Returns an
/// uncovered integer in [0, lcm), or nullopt if the system covers Z.
std::optional<BigInt> find_witness_split(const CoveringSystem& system);

/// Exact density computed over the same residue tree as find_witness_split.
Rational density_split(const CoveringSystem& system);

/// Dispatch: scan if lcm <= 2^24, else inclusion-exclusion if k <= 24, else
/// split.
CoverageReport covers(const CoveringSystem& system);

/// Runs one specific method; may throw CapacityError.
CoverageReport covers_with(const CoveringSystem& system, CoverageMethod method);

/// Number of classes that contain x.
std::size_t multiplicity(const CoveringSystem& system, const BigInt& x);

struct SystemFlags {
  bool distinct_moduli = true;
  bool all_moduli_odd = true;
  bool all_moduli_gt_one = true;
  bool lcm_squarefree = true;

  friend bool operator==(const SystemFlags&, const SystemFlags&) = default;
};

SystemFlags predicates(const CoveringSystem& system);

}  // namespace covering
