#include "covering/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace covering {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::string Rational::str() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::string Rational::decimal(unsigned digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt mag = abs(value_.get_num()) * scale;
  mpz_tdiv_q(mag.get_mpz_t(), mag.get_mpz_t(), value_.get_den().get_mpz_t());

  std::string body = mag.get_str(10);
  if (body.size() <= digits) {
    body.insert(0, digits + 1 - body.size(), '0');
  }
  std::string out;
  if (sign() < 0 && mag != 0) out.push_back('-');
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out += body.substr(body.size() - digits);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_bigint(text));
  }
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

}  // namespace covering
