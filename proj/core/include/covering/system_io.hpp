#pragma once

#include "covering/residue.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace covering {

/// Malformed system text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: one class per line as "a n", '#' starts a comment, blank
// lines are ignored. Negative residues are accepted and normalized.
CoveringSystem read_system(std::istream& in);
CoveringSystem parse_system(const std::string& text);

void write_system(std::ostream& out, const CoveringSystem& system);
std::string format_system(const CoveringSystem& system);

}  // namespace covering
