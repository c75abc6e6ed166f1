#include "covering/examples.hpp"

#include <array>
#include <utility>

namespace covering::examples {

namespace {

template <std::size_t N>
CoveringSystem from_table(const std::array<std::pair<long, long>, N>& table) {
  std::vector<ResidueClass> classes;
  classes.reserve(N);
  for (const auto& [a, n] : table) classes.emplace_back(BigInt(a), BigInt(n));
  return CoveringSystem(std::move(classes));
}

}  // namespace

CoveringSystem erdos5() {
  static constexpr std::array<std::pair<long, long>, 5> kTable{{
      {0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12},
  }};
  return from_table(kTable);
}

CoveringSystem erdos14() {
  static constexpr std::array<std::pair<long, long>, 14> kTable{{
      {0, 2}, {0, 3}, {0, 5}, {1, 6}, {0, 7}, {1, 10}, {1, 14},
      {2, 15}, {2, 21}, {23, 30}, {4, 35}, {5, 42}, {59, 70}, {104, 105},
  }};
  return from_table(kTable);
}

std::optional<CoveringSystem> by_name(std::string_view name) {
  if (name == "erdos5") return erdos5();
  if (name == "erdos14") return erdos14();
  return std::nullopt;
}

std::vector<std::string_view> names() { return {"erdos5", "erdos14"}; }

}  // namespace covering::examples
