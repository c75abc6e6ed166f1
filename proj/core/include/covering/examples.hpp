#pragma once

#include "covering/residue.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace covering::examples {

/// {0(2), 0(3), 1(4), 5(6), 7(12)}
CoveringSystem erdos5();

/// The 14-class Erdős system with lcm 210.
CoveringSystem erdos14();

/// Lookup by name ("erdos5", "erdos14").
std::optional<CoveringSystem> by_name(std::string_view name);

std::vector<std::string_view> names();

}  // namespace covering::examples
