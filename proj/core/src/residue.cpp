#include "covering/residue.hpp"

#include <stdexcept>

namespace covering {

ResidueClass::ResidueClass(const BigInt& residue, const BigInt& modulus) : modulus_(modulus) {
  if (modulus < 1) {
    throw std::invalid_argument("residue class modulus must be >= 1, got " + to_string(modulus));
  }
  residue_ = floor_mod(residue, modulus);
}

bool ResidueClass::contains(const BigInt& x) const { return floor_mod(x, modulus_) == residue_; }

CoveringSystem::CoveringSystem(std::vector<ResidueClass> classes) : classes_(std::move(classes)) {
  for (const auto& c : classes_) {
    mpz_lcm(lcm_.get_mpz_t(), lcm_.get_mpz_t(), c.modulus().get_mpz_t());
  }
}

std::vector<BigInt> CoveringSystem::moduli() const {
  std::vector<BigInt> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(c.modulus());
  return out;
}

CoveringSystem CoveringSystem::with(const ResidueClass& extra) const {
  auto copy = classes_;
  copy.push_back(extra);
  return CoveringSystem(std::move(copy));
}

CoveringSystem CoveringSystem::without(std::size_t index) const {
  if (index >= classes_.size()) {
    throw std::out_of_range("CoveringSystem::without: index out of range");
  }
  auto copy = classes_;
  copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(index));
  return CoveringSystem(std::move(copy));
}

CoveringSystem normalize(std::span<const std::pair<BigInt, BigInt>> raw) {
  std::vector<ResidueClass> classes;
  classes.reserve(raw.size());
  for (const auto& [a, n] : raw) {
    if (n <= 0) {
      throw std::invalid_argument("normalize: modulus " + to_string(n) + " is not positive");
    }
    classes.emplace_back(a, n);
  }
  return CoveringSystem(std::move(classes));
}

}  // namespace covering
