#pragma once

#include "covering/numeric.hpp"

#include <span>
#include <utility>
#include <vector>

namespace covering {

/// The residue class a (mod n) = { a + n*x : x in Z }, stored with 0 <= a < n.
class ResidueClass {
 public:
  /// Reduces `residue` into [0, modulus). Throws std::invalid_argument when
  /// modulus < 1.
  ResidueClass(const BigInt& residue, const BigInt& modulus);

  const BigInt& residue() const { return residue_; }
  const BigInt& modulus() const { return modulus_; }

  bool contains(const BigInt& x) const;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

 private:
  BigInt residue_;
  BigInt modulus_;
};

/// Ordered finite list of residue classes with the lcm of their moduli
/// (one full period N_A). The empty system has lcm 1.
class CoveringSystem {
 public:
  CoveringSystem() = default;
  explicit CoveringSystem(std::vector<ResidueClass> classes);

  const std::vector<ResidueClass>& classes() const { return classes_; }
  const BigInt& lcm() const { return lcm_; }
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }

  std::vector<BigInt> moduli() const;

  /// Copy with one more class appended.
  CoveringSystem with(const ResidueClass& extra) const;
  /// Copy without the class at `index`.
  CoveringSystem without(std::size_t index) const;

  friend bool operator==(const CoveringSystem& a, const CoveringSystem& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<ResidueClass> classes_;
  BigInt lcm_ = 1;
};

/// Builds a system from raw (residue, modulus) pairs, reducing every residue
/// into [0, n). Throws std::invalid_argument on a modulus <= 0.
CoveringSystem normalize(std::span<const std::pair<BigInt, BigInt>> raw);

}  // namespace covering
