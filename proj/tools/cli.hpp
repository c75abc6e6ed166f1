#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace covering::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one covsys invocation. `args` excludes the program name. Returns 0
/// on success, 1 when the command ran but the checked property is false, 2
/// on usage or input errors.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace covering::cli
