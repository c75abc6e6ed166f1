#include "covering/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace covering::bounds {

std::size_t schedule_d(std::size_t t) {
  if (t == 0) throw std::invalid_argument("schedule_d: t is 1-based");
  return 3 * (t - 1) / 5;
}

ModulusFamily modulus_family(std::size_t t, std::span<const BigInt> primes) {
  if (t == 0 || primes.size() < t) {
    throw std::invalid_argument("modulus_family: need t >= 1 and at least t primes");
  }
  ModulusFamily family{t, {}};
  const BigInt& pt = primes[t - 1];
  for (std::size_t i = 1; i <= schedule_d(t); ++i) {
    family.members.push_back(primes[i - 1] * pt);
  }
  if (t > kSmallIndexLimit) {
    family.members.push_back(primes[0] * primes[1] * pt);
    family.members.push_back(primes[0] * primes[2] * pt);
  }
  std::sort(family.members.begin(), family.members.end());
  return family;
}

BoundProfile profile_for_primes(std::span<const BigInt> primes) {
  BoundProfile profile;
  profile.r = primes.size();
  profile.q.assign(primes.begin(), primes.end());
  for (std::size_t t = 1; t <= profile.r; ++t) {
    const std::size_t d = schedule_d(t);
    const unsigned long excluded = t <= kSmallIndexLimit ? 1 : 3;
    const BigInt size = profile.q[t - 1] - static_cast<unsigned long>(d) - excluded;
    if (size <= 0) {
      throw std::invalid_argument("profile_for_primes: prime " + to_string(profile.q[t - 1]) +
                                  " at t=" + std::to_string(t) + " is too small");
    }
    profile.d.push_back(d);
    profile.x.emplace_back(BigInt(1), size);
  }
  return profile;
}

BoundProfile build_profile(std::size_t r) {
  const auto q = odd_primes(r);
  return profile_for_primes(q);
}

namespace {

void check_schedule(std::size_t r, std::span<const std::size_t> d) {
  if (d.size() != r) {
    throw std::invalid_argument("f: point has " + std::to_string(r) + " coordinates but schedule has " +
                                std::to_string(d.size()));
  }
  for (std::size_t t = 1; t <= r; ++t) {
    if (d[t - 1] >= t) {
      throw std::invalid_argument("f: schedule entry d_" + std::to_string(t) + " must be < " +
                                  std::to_string(t));
    }
  }
}

}  // namespace

Rational eval_f(std::span<const Rational> x, std::span<const std::size_t> d) {
  const std::size_t r = x.size();
  check_schedule(r, d);
  const Rational zero;
  auto X = [&](std::size_t i) -> const Rational& { return i <= r ? x[i - 1] : zero; };

  Rational product = Rational(1) + X(1) + X(2);
  for (std::size_t t = 3; t <= r; ++t) product *= Rational(1) + x[t - 1];

  Rational linear;
  for (const auto& v : x) linear += v;

  Rational pairs;  // sum_{t>=3} sum_{i<=d_t} x_i x_t
  for (std::size_t t = 3; t <= r; ++t) {
    for (std::size_t i = 1; i <= d[t - 1]; ++i) pairs += x[i - 1] * x[t - 1];
  }

  Rational low;  // sum_{3<=t<=8} x_t
  for (std::size_t t = 3; t <= std::min(r, kSmallIndexLimit); ++t) low += x[t - 1];

  Rational high;  // sum_{t>=9} x_t
  for (std::size_t t = kSmallIndexLimit + 1; t <= r; ++t) high += x[t - 1];

  Rational tail_pairs;  // sum_{t>=6} sum_{3<=i<=d_t} x_i x_t
  for (std::size_t t = 6; t <= r; ++t) {
    for (std::size_t i = 3; i <= d[t - 1]; ++i) tail_pairs += x[i - 1] * x[t - 1];
  }

  const Rational x12 = X(1) * X(2);
  return product - linear + x12 - pairs + x12 * low - X(1) * X(3) * high + x12 * tail_pairs;
}

MultilinearPoly expand_f(std::size_t r, std::span<const std::size_t> d) {
  if (r > kMaxExpandVars) {
    throw std::invalid_argument("expand_f: r=" + std::to_string(r) + " exceeds the limit of " +
                                std::to_string(kMaxExpandVars) + " variables (2^r dense coefficients)");
  }
  check_schedule(r, d);
  auto bit = [](std::size_t t) { return VarSet{1} << (t - 1); };

  MultilinearPoly f(r);
  // (1 + x_1 + x_2) * prod_{t>=3} (1 + x_t)
  f.add(0, 1);
  if (r >= 1) f.add(bit(1), 1);
  if (r >= 2) f.add(bit(2), 1);
  for (std::size_t t = 3; t <= r; ++t) f.multiply_by_one_plus(t);

  for (std::size_t t = 1; t <= r; ++t) f.add(bit(t), -1);
  if (r < 2) return f;

  const VarSet x12 = bit(1) | bit(2);
  f.add(x12, 1);
  for (std::size_t t = 3; t <= r; ++t) {
    for (std::size_t i = 1; i <= d[t - 1]; ++i) f.add(bit(i) | bit(t), -1);
  }
  for (std::size_t t = 3; t <= std::min(r, kSmallIndexLimit); ++t) f.add(x12 | bit(t), 1);
  for (std::size_t t = kSmallIndexLimit + 1; t <= r; ++t) f.add(bit(1) | bit(3) | bit(t), -1);
  for (std::size_t t = 6; t <= r; ++t) {
    for (std::size_t i = 3; i <= d[t - 1]; ++i) f.add(x12 | bit(i) | bit(t), 1);
  }
  return f;
}

NonnegCheck check_nonneg(const MultilinearPoly& poly) {
  NonnegCheck check;
  const auto coeffs = poly.coefficients();
  for (VarSet s = 0; s < coeffs.size(); ++s) {
    if (coeffs[s].sign() < 0) check.offenders.push_back(s);
  }
  check.nonnegative = check.offenders.empty();
  return check;
}

std::vector<BoundRow> bound_table(std::size_t r_min, std::size_t r_max) {
  if (r_min < 1 || r_min > r_max) {
    throw std::invalid_argument("bound_table: need 1 <= r_min <= r_max");
  }
  std::vector<BoundRow> rows;
  for (std::size_t r = r_min; r <= r_max; ++r) {
    const auto profile = build_profile(r);
    BoundRow row;
    row.r = r;
    row.value = eval_f(profile.x, profile.d);
    row.meets_two = row.value >= Rational(2);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void require_odd_primes(std::span<const BigInt> primes, const char* who) {
  for (const auto& p : primes) {
    if (p < 3) {
      throw std::invalid_argument(std::string(who) + ": prime " + to_string(p) +
                                  " is not >= 3 (p = 2 makes a denominator vanish)");
    }
  }
}

}  // namespace

BffResult bff_odd(std::span<const BigInt> primes) {
  require_odd_primes(primes, "bff_odd");
  Rational product(1), sum;
  for (const auto& p : primes) {
    product *= Rational(p - 1, p - 2);
    sum += Rational(1, p - 2);
  }
  BffResult out;
  out.value = product - sum;
  out.satisfied = out.value > Rational(2);
  return out;
}

BffResult bff_squarefree(std::span<const BigInt> primes) {
  require_odd_primes(primes, "bff_squarefree");
  if (std::set<BigInt>(primes.begin(), primes.end()).size() != primes.size()) {
    throw std::invalid_argument("bff_squarefree: primes must be distinct");
  }
  Rational product(1), sum;
  for (const auto& p : primes) {
    product *= Rational(p, p - 1);
    sum += Rational(1, p - 1);
  }
  BffResult out;
  out.value = product - sum;
  out.satisfied = out.value >= Rational(2);
  return out;
}

std::optional<std::size_t> minimal_squarefree_r(std::size_t r_max) {
  const auto primes = odd_primes(r_max);
  for (std::size_t r = 1; r <= r_max; ++r) {
    if (bff_squarefree(std::span(primes).first(r)).satisfied) return r;
  }
  return std::nullopt;
}

}  // namespace covering::bounds
