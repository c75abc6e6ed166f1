#include "covering/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace covering {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a <= 0 || b <= 0) {
    throw std::invalid_argument("lcm: arguments must be positive");
  }
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt lcm_list(std::span<const BigInt> ns) {
  BigInt acc = 1;
  for (const auto& n : ns) {
    if (n <= 0) {
      throw std::invalid_argument("lcm_list: modulus " + to_string(n) + " is not positive");
    }
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
  }
  return acc;
}

BigInt floor_mod(const BigInt& a, const BigInt& n) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Congruence> crt_pair(const BigInt& a1, const BigInt& n1,
                                   const BigInt& a2, const BigInt& n2) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("crt_pair: moduli must be >= 1");
  }
  const BigInt g = gcd(n1, n2);
  const BigInt diff = a2 - a1;
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) {
    return std::nullopt;
  }
  // Solve n1 * k = diff (mod n2): k = (diff/g) * (n1/g)^-1 (mod n2/g).
  const BigInt n2g = n2 / g;
  const BigInt l = n1 * n2g;
  BigInt k = 0;
  if (n2g > 1) {
    BigInt inv;
    const BigInt n1g = n1 / g;
    mpz_invert(inv.get_mpz_t(), n1g.get_mpz_t(), n2g.get_mpz_t());
    k = floor_mod(BigInt(diff / g) * inv, n2g);
  }
  return Congruence{floor_mod(a1 + n1 * k, l), l};
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (BigInt d = 3; d * d <= n; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

std::vector<BigInt> odd_primes(std::size_t r) {
  std::vector<BigInt> out;
  out.reserve(r);
  std::vector<std::uint64_t> found;
  for (std::uint64_t c = 3; out.size() < r; c += 2) {
    bool prime = true;
    for (auto p : found) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      found.push_back(c);
      out.push_back(from_u64(c));
    }
  }
  return out;
}

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n < 1) {
    throw std::invalid_argument("factorize: argument must be >= 1");
  }
  std::vector<PrimePower> out;
  BigInt rest = n;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(BigInt(2));
  for (BigInt d = 3; d * d <= rest; d += 2) {
    strip(d);
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

bool is_squarefree(const BigInt& n) {
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  // gmp rejects a leading '+'.
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

bool fits_u64(const BigInt& n) {
  return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& n) {
  if (!fits_u64(n)) {
    throw std::out_of_range("value " + to_string(n) + " does not fit in 64 bits");
  }
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
  return v;
}

BigInt from_u64(std::uint64_t v) {
  BigInt n;
  mpz_import(n.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return n;
}

}  // namespace covering
