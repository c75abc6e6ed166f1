#pragma once

#include "covering/numeric.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace covering {

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every constructor and operator leaves the value canonical, so equality is
/// value equality and the numerator never carries a common factor.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  /// Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den", always with an explicit denominator (e.g. "2/1").
  std::string str() const;

  /// Decimal expansion truncated toward zero after `digits` places.
  std::string decimal(unsigned digits = 6) const;

  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Parses "a", "a/b" (b != 0). Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

}  // namespace covering
