#pragma once

#include "covering/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace covering {

/// Bitmask over variables; bit (t - 1) stands for the 1-based variable x_t.
using VarSet = std::uint32_t;

inline constexpr std::size_t kMaxMultilinearVars = 24;

/// Multilinear polynomial in r variables, stored densely: one coefficient per
/// subset of variables (2^r entries).
class MultilinearPoly {
 public:
  /// Zero polynomial. Throws std::invalid_argument if r > kMaxMultilinearVars.
  explicit MultilinearPoly(std::size_t r);

  std::size_t variables() const { return vars_; }
  std::size_t term_slots() const { return coeffs_.size(); }

  const Rational& coefficient(VarSet s) const { return coeffs_.at(s); }
  void set(VarSet s, const Rational& c) { coeffs_.at(s) = c; }
  void add(VarSet s, const Rational& c) { coeffs_.at(s) += c; }

  /// Multiplies in place by (1 + x_t), 1-based t. Requires that no stored
  /// monomial already contains x_t.
  void multiply_by_one_plus(std::size_t t);

  /// Exact value at `point` (length must equal variables()).
  Rational evaluate(std::span<const Rational> point) const;

  std::size_t nonzero_terms() const;

  std::span<const Rational> coefficients() const { return coeffs_; }

 private:
  std::size_t vars_;
  std::vector<Rational> coeffs_;
};

/// Builds a variable set from 1-based indices.
VarSet var_set(std::initializer_list<std::size_t> vars);

/// "{1,2,3}" with 1-based indices; "{}" for the empty set.
std::string format_var_set(VarSet s);

}  // namespace covering
