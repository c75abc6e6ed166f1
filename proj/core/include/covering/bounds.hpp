#pragma once

#include "covering/multilinear.hpp"
#include "covering/numeric.hpp"
#include "covering/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

// Quantitative bounds for odd covering systems with distinct moduli and a
// square-free period. Prime indices t are 1-based throughout the API.

namespace covering::bounds {

/// floor(3(t-1)/5), t >= 1.
std::size_t schedule_d(std::size_t t);

/// Moduli collapsed onto the t-th prime: p_i*p_t for 1 <= i <= d_t, plus
/// p_1*p_2*p_t and p_1*p_3*p_t when t >= 9.
struct ModulusFamily {
  std::size_t t = 0;
  std::vector<BigInt> members;  // ascending
};

/// Throws std::invalid_argument when primes.size() < t or t == 0.
ModulusFamily modulus_family(std::size_t t, std::span<const BigInt> primes);

/// Indices at or below this use |R_t| = p_t - 1 - d_t; above it the two
/// extra triples in M_t cost two more residues.
inline constexpr std::size_t kSmallIndexLimit = 8;

/// Extremal evaluation point for r primes.
struct BoundProfile {
  std::size_t r = 0;
  std::vector<BigInt> q;       // q[t-1] = t-th odd prime
  std::vector<std::size_t> d;  // d[t-1] = schedule_d(t)
  std::vector<Rational> x;     // x[t-1] = x'_t

  const BigInt& q_at(std::size_t t) const { return q.at(t - 1); }
  std::size_t d_at(std::size_t t) const { return d.at(t - 1); }
  const Rational& x_at(std::size_t t) const { return x.at(t - 1); }
};

/// Profile over the first r odd primes.
BoundProfile build_profile(std::size_t r);

/// Same construction over an arbitrary ascending prime list (the actual
/// primes p_t of a period). Throws std::invalid_argument if some
/// p_t - d_t - 1 (resp. - 3) is not positive.
BoundProfile profile_for_primes(std::span<const BigInt> primes);

/// Exact f(x_1, ..., x_r). Variables beyond r count as 0, empty sums as 0
/// and empty products as 1. Throws std::invalid_argument if x.size() !=
/// d.size().
Rational eval_f(std::span<const Rational> x, std::span<const std::size_t> d);

inline constexpr std::size_t kMaxExpandVars = 21;

/// Multilinear expansion of f. Throws std::invalid_argument when r exceeds
/// kMaxExpandVars or d.size() != r.
MultilinearPoly expand_f(std::size_t r, std::span<const std::size_t> d);

struct NonnegCheck {
  bool nonnegative = true;
  std::vector<VarSet> offenders;
};

NonnegCheck check_nonneg(const MultilinearPoly& poly);

struct BoundRow {
  std::size_t r = 0;
  Rational value;
  bool meets_two = false;  // value >= 2
};

/// One row per r in [r_min, r_max]: f evaluated at build_profile(r).
std::vector<BoundRow> bound_table(std::size_t r_min, std::size_t r_max);

struct BffResult {
  Rational value;
  bool satisfied = false;
};

/// prod (p-1)/(p-2) - sum 1/(p-2), satisfied when > 2. Rejects p < 3.
BffResult bff_odd(std::span<const BigInt> primes);

/// prod p/(p-1) - sum 1/(p-1), satisfied when >= 2. Rejects p < 3 and
/// repeated primes.
BffResult bff_squarefree(std::span<const BigInt> primes);

/// Smallest r in [1, r_max] for which bff_squarefree over the first r odd
/// primes is satisfied.
std::optional<std::size_t> minimal_squarefree_r(std::size_t r_max);

}  // namespace covering::bounds
