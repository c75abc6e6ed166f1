#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace covering {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// One solved congruence x = residue (mod modulus), with 0 <= residue < modulus.
struct Congruence {
  BigInt residue;
  BigInt modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Nonnegative gcd; gcd(0, 0) == 0.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Least common multiple of two positive integers.
BigInt lcm(const BigInt& a, const BigInt& b);

/// Least common multiple of a list of positive integers (1 for the empty
/// list). Throws std::invalid_argument on a nonpositive entry.
BigInt lcm_list(std::span<const BigInt> ns);

/// Remainder of a modulo n in [0, n). Requires n > 0.
BigInt floor_mod(const BigInt& a, const BigInt& n);

/// Intersection of a1 (mod n1) and a2 (mod n2).
///
/// Returns the single class modulo lcm(n1, n2) contained in both inputs, or
/// std::nullopt when a1 and a2 differ modulo gcd(n1, n2). Incompatibility is
/// an ordinary result here. Throws std::invalid_argument if a modulus is < 1.
std::optional<Congruence> crt_pair(const BigInt& a1, const BigInt& n1,
                                   const BigInt& a2, const BigInt& n2);

/// The first r odd primes, ascending: 3, 5, 7, 11, ...
std::vector<BigInt> odd_primes(std::size_t r);

/// Trial-division primality test; intended for small arguments.
bool is_prime(const BigInt& n);

/// Prime factorization by trial division, ascending primes. factorize(1) is
/// empty. Throws std::invalid_argument for n < 1.
std::vector<PrimePower> factorize(const BigInt& n);

bool is_squarefree(const BigInt& n);

std::string to_string(const BigInt& n);

/// Parses a base-10 integer with optional sign; throws std::invalid_argument
/// on anything else (including empty input and trailing junk).
BigInt parse_bigint(const std::string& text);

/// True when n fits in an unsigned 64-bit value.
bool fits_u64(const BigInt& n);
std::uint64_t to_u64(const BigInt& n);
BigInt from_u64(std::uint64_t v);

}  // namespace covering
