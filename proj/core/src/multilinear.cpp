#include "covering/multilinear.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace covering {

MultilinearPoly::MultilinearPoly(std::size_t r) : vars_(r) {
  if (r > kMaxMultilinearVars) {
    throw std::invalid_argument("MultilinearPoly: " + std::to_string(r) +
                                " variables exceeds the dense limit of " +
                                std::to_string(kMaxMultilinearVars));
  }
  coeffs_.resize(std::size_t{1} << r);
}

void MultilinearPoly::multiply_by_one_plus(std::size_t t) {
  if (t == 0 || t > vars_) {
    throw std::out_of_range("multiply_by_one_plus: variable index out of range");
  }
  const VarSet bit = VarSet{1} << (t - 1);
  for (VarSet s = 0; s < coeffs_.size(); ++s) {
    if ((s & bit) == 0 && !coeffs_[s].is_zero()) {
      coeffs_[s | bit] += coeffs_[s];
    }
  }
}

Rational MultilinearPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_) {
    throw std::invalid_argument("MultilinearPoly::evaluate: expected " + std::to_string(vars_) +
                                " coordinates, got " + std::to_string(point.size()));
  }
  // Eliminate the highest variable each round: P = P0 + x_t * P1.
  std::vector<Rational> work(coeffs_.begin(), coeffs_.end());
  for (std::size_t t = vars_; t > 0; --t) {
    const std::size_t half = std::size_t{1} << (t - 1);
    for (std::size_t s = 0; s < half; ++s) {
      if (!work[s + half].is_zero()) work[s] += point[t - 1] * work[s + half];
    }
    work.resize(half);
  }
  return work.front();
}

std::size_t MultilinearPoly::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

VarSet var_set(std::initializer_list<std::size_t> vars) {
  VarSet s = 0;
  for (auto t : vars) {
    if (t == 0 || t > kMaxMultilinearVars) throw std::out_of_range("var_set: bad variable index");
    s |= VarSet{1} << (t - 1);
  }
  return s;
}

std::string format_var_set(VarSet s) {
  std::string out = "{";
  bool first = true;
  while (s != 0) {
    const int bit = std::countr_zero(s);
    if (!first) out += ',';
    out += std::to_string(bit + 1);
    first = false;
    s &= s - 1;
  }
  return out + "}";
}

}  // namespace covering
