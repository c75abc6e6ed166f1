#include "covering/coverage.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace covering {

std::string_view method_name(CoverageMethod m) {
  switch (m) {
    case CoverageMethod::scan:
      return "scan";
    case CoverageMethod::inclusion_exclusion:
      return "inclusion_exclusion";
    case CoverageMethod::split:
      return "split";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// scan

CoverageReport covers_scan(const CoveringSystem& system, std::uint64_t threshold) {
  const BigInt& lcm = system.lcm();
  if (lcm > from_u64(threshold)) {
    throw CapacityError("scan: lcm " + to_string(lcm) + " exceeds the scan threshold " +
                        std::to_string(threshold) + "; use inclusion-exclusion or split");
  }
  const std::uint64_t period = to_u64(lcm);
  std::vector<std::uint64_t> bits((period + 63) / 64, 0);
  for (const auto& c : system.classes()) {
    const std::uint64_t n = to_u64(c.modulus());
    for (std::uint64_t x = to_u64(c.residue()); x < period; x += n) {
      bits[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }

  std::uint64_t set = 0;
  std::optional<std::uint64_t> first_gap;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    const std::uint64_t base = std::uint64_t{w} * 64;
    const std::uint64_t valid = std::min<std::uint64_t>(64, period - base);
    const std::uint64_t mask = valid == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << valid) - 1);
    word &= mask;
    set += static_cast<std::uint64_t>(std::popcount(word));
    if (!first_gap && word != mask) {
      first_gap = base + static_cast<std::uint64_t>(std::countr_one(word));
    }
  }

  CoverageReport report;
  report.method = CoverageMethod::scan;
  report.covers = !first_gap.has_value();
  if (first_gap) report.witness = from_u64(*first_gap);
  report.density_covered = Rational(from_u64(set), lcm);
  return report;
}

// ---------------------------------------------------------------------------
// inclusion-exclusion

namespace {

using u64 = std::uint64_t;
__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

// Inverse of a modulo m (gcd(a, m) == 1, m >= 2).
u64 inverse_u64(u64 a, u64 m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  std::int64_t inv = old_s % static_cast<std::int64_t>(m);
  if (inv < 0) inv += static_cast<std::int64_t>(m);
  return static_cast<u64>(inv);
}

struct Refinement64 {
  u64 residue;
  u64 modulus;
};

// CRT for moduli dividing a common period below 2^62; residues reduced.
std::optional<Refinement64> crt_u64(const Refinement64& x, const Refinement64& y) {
  const u64 g = std::gcd(x.modulus, y.modulus);
  if (x.residue % g != y.residue % g) return std::nullopt;
  const u64 m2 = y.modulus / g;
  if (m2 == 1) return x;
  const u64 l = x.modulus * m2;
  const i128 diff = (static_cast<i128>(y.residue) - static_cast<i128>(x.residue)) / g;
  i128 dm = diff % static_cast<i128>(m2);
  if (dm < 0) dm += m2;
  const u64 inv = inverse_u64((x.modulus / g) % m2, m2);
  const u64 k = static_cast<u64>(static_cast<u128>(dm) * inv % m2);
  const u64 a = static_cast<u64>((static_cast<u128>(x.residue) + static_cast<u128>(x.modulus) * k) % l);
  return Refinement64{a, l};
}

struct Ie64 {
  std::vector<Refinement64> classes;
  u64 period;
  i128 total = 0;

  void walk(std::size_t start, bool odd_size_next, const Refinement64& acc) {
    for (std::size_t i = start; i < classes.size(); ++i) {
      const auto joined = crt_u64(acc, classes[i]);
      if (!joined) continue;
      const i128 term = period / joined->modulus;
      total += odd_size_next ? term : -term;
      walk(i + 1, !odd_size_next, *joined);
    }
  }
};

struct IeBig {
  std::vector<Congruence> classes;
  BigInt period;
  BigInt total = 0;

  void walk(std::size_t start, bool odd_size_next, const Congruence& acc) {
    for (std::size_t i = start; i < classes.size(); ++i) {
      const auto joined = crt_pair(acc.residue, acc.modulus, classes[i].residue, classes[i].modulus);
      if (!joined) continue;
      const BigInt term = period / joined->modulus;
      if (odd_size_next) {
        total += term;
      } else {
        total -= term;
      }
      walk(i + 1, !odd_size_next, *joined);
    }
  }
};

}  // namespace

Rational density_inclusion_exclusion(const CoveringSystem& system, std::size_t max_classes) {
  if (system.size() > max_classes) {
    throw CapacityError("inclusion-exclusion: " + std::to_string(system.size()) +
                        " classes exceeds the limit of " + std::to_string(max_classes) +
                        "; use scan or split");
  }
  const BigInt& lcm = system.lcm();
  // Every refinement modulus divides lcm, so each term is the integer lcm/m.
  if (mpz_sizeinbase(lcm.get_mpz_t(), 2) <= 62) {
    Ie64 ie;
    ie.period = to_u64(lcm);
    for (const auto& c : system.classes()) {
      ie.classes.push_back({to_u64(c.residue()), to_u64(c.modulus())});
    }
    ie.walk(0, true, Refinement64{0, 1});
    const bool negative = ie.total < 0;
    const u128 mag = static_cast<u128>(negative ? -ie.total : ie.total);
    BigInt num = from_u64(static_cast<u64>(mag >> 64));
    num <<= 64;
    num += from_u64(static_cast<u64>(mag));
    if (negative) num = -num;
    return Rational(num, lcm);
  }
  IeBig ie;
  ie.period = lcm;
  for (const auto& c : system.classes()) {
    ie.classes.push_back({c.residue(), c.modulus()});
  }
  ie.walk(0, true, Congruence{0, 1});
  return Rational(ie.total, lcm);
}

// ---------------------------------------------------------------------------
// split

namespace {

using ClassList = std::vector<Congruence>;

class SplitSearch {
 public:
  explicit SplitSearch(const CoveringSystem& system) {
    std::set<BigInt> primes;
    std::set<BigInt> seen;
    for (const auto& c : system.classes()) {
      if (!seen.insert(c.modulus()).second) continue;
      for (const auto& pp : factorize(c.modulus())) primes.insert(pp.prime);
    }
    primes_.assign(primes.begin(), primes.end());
    for (const auto& c : system.classes()) root_.push_back({c.residue(), c.modulus()});
  }

  std::optional<BigInt> witness() const { return witness_at(root_); }
  Rational density() const { return density_at(root_); }

 private:
  static bool has_full_class(const ClassList& classes) {
    return std::any_of(classes.begin(), classes.end(),
                       [](const Congruence& c) { return c.modulus == 1; });
  }

  const BigInt* split_prime(const ClassList& classes) const {
    for (const auto& p : primes_) {
      for (const auto& c : classes) {
        if (mpz_divisible_p(c.modulus.get_mpz_t(), p.get_mpz_t())) return &p;
      }
    }
    return nullptr;
  }

  // Classes restricted to x = c + p*y, rewritten as congruences on y.
  static ClassList induce(const ClassList& classes, const BigInt& p, const BigInt& c) {
    ClassList out;
    out.reserve(classes.size());
    for (const auto& cls : classes) {
      if (mpz_divisible_p(cls.modulus.get_mpz_t(), p.get_mpz_t())) {
        if (floor_mod(cls.residue, p) != c) continue;
        const BigInt m = cls.modulus / p;
        out.push_back({floor_mod(BigInt((cls.residue - c) / p), m), m});
      } else {
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), p.get_mpz_t(), cls.modulus.get_mpz_t());
        out.push_back({floor_mod(BigInt((cls.residue - c) * inv), cls.modulus), cls.modulus});
      }
    }
    return out;
  }

  // Residues mod p hit by some class whose modulus p divides. Every other
  // residue c keeps only the classes coprime to p, and those induced systems
  // are affine images of one another: same coverage, same density. So one
  // representative (the smallest free residue) stands in for all of them.
  struct Branches {
    std::vector<BigInt> hit;  // ascending, distinct
    std::optional<BigInt> free_rep;
    BigInt free_count;
  };

  static Branches branches(const ClassList& classes, const BigInt& p) {
    Branches b;
    for (const auto& cls : classes) {
      if (mpz_divisible_p(cls.modulus.get_mpz_t(), p.get_mpz_t())) b.hit.push_back(floor_mod(cls.residue, p));
    }
    std::sort(b.hit.begin(), b.hit.end());
    b.hit.erase(std::unique(b.hit.begin(), b.hit.end()), b.hit.end());
    b.free_count = p - BigInt(b.hit.size());
    if (b.free_count > 0) {
      BigInt c = 0;
      for (const auto& h : b.hit) {
        if (h != c) break;
        ++c;
      }
      b.free_rep = c;
    }
    return b;
  }

  std::optional<BigInt> witness_at(const ClassList& classes) const {
    if (has_full_class(classes)) return std::nullopt;
    const BigInt* p = split_prime(classes);
    if (p == nullptr) {
      return BigInt(0);  // only possible for the empty list
    }
    const Branches b = branches(classes, *p);
    auto hit = b.hit.begin();
    bool free_done = !b.free_rep;
    while (hit != b.hit.end() || !free_done) {
      BigInt c;
      if (!free_done && (hit == b.hit.end() || *b.free_rep < *hit)) {
        c = *b.free_rep;
        free_done = true;
      } else {
        c = *hit++;
      }
      if (auto y = witness_at(induce(classes, *p, c))) {
        return BigInt(c + *p * *y);
      }
    }
    return std::nullopt;
  }

  Rational density_at(const ClassList& classes) const {
    if (has_full_class(classes)) return Rational(1);
    const BigInt* p = split_prime(classes);
    if (p == nullptr) return Rational(0);
    const Branches b = branches(classes, *p);
    Rational sum;
    for (const auto& c : b.hit) sum += density_at(induce(classes, *p, c));
    if (b.free_rep) sum += Rational(b.free_count) * density_at(induce(classes, *p, *b.free_rep));
    return sum / Rational(*p);
  }

  std::vector<BigInt> primes_;
  ClassList root_;
};

}  // namespace

std::optional<BigInt> find_witness_split(const CoveringSystem& system) {
  return SplitSearch(system).witness();
}

Rational density_split(const CoveringSystem& system) { return SplitSearch(system).density(); }

// ---------------------------------------------------------------------------
// dispatch and diagnostics

CoverageReport covers_with(const CoveringSystem& system, CoverageMethod method) {
  switch (method) {
    case CoverageMethod::scan:
      return covers_scan(system);
    case CoverageMethod::inclusion_exclusion: {
      CoverageReport report;
      report.method = method;
      report.density_covered = density_inclusion_exclusion(system);
      report.covers = report.density_covered == Rational(1);
      return report;
    }
    case CoverageMethod::split: {
      SplitSearch search(system);
      CoverageReport report;
      report.method = method;
      report.witness = search.witness();
      report.covers = !report.witness.has_value();
      report.density_covered = report.covers ? Rational(1) : search.density();
      return report;
    }
  }
  throw std::invalid_argument("covers_with: unknown method");
}

CoverageReport covers(const CoveringSystem& system) {
  if (system.lcm() <= from_u64(kDefaultScanThreshold)) {
    return covers_with(system, CoverageMethod::scan);
  }
  if (system.size() <= kMaxInclusionExclusionClasses) {
    return covers_with(system, CoverageMethod::inclusion_exclusion);
  }
  return covers_with(system, CoverageMethod::split);
}

std::size_t multiplicity(const CoveringSystem& system, const BigInt& x) {
  return static_cast<std::size_t>(std::count_if(
      system.classes().begin(), system.classes().end(),
      [&](const ResidueClass& c) { return c.contains(x); }));
}

SystemFlags predicates(const CoveringSystem& system) {
  SystemFlags flags;
  auto moduli = system.moduli();
  std::sort(moduli.begin(), moduli.end());
  flags.distinct_moduli = std::adjacent_find(moduli.begin(), moduli.end()) == moduli.end();
  flags.all_moduli_odd = std::all_of(moduli.begin(), moduli.end(),
                                     [](const BigInt& n) { return mpz_odd_p(n.get_mpz_t()) != 0; });
  flags.all_moduli_gt_one =
      std::all_of(moduli.begin(), moduli.end(), [](const BigInt& n) { return n > 1; });
  flags.lcm_squarefree = is_squarefree(system.lcm());
  return flags;
}

}  // namespace covering
