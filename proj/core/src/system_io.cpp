#include "covering/system_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace covering {

CoveringSystem read_system(std::istream& in) {
  std::vector<ResidueClass> classes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected \"a n\", found " + std::to_string(tokens.size()) + " fields");
    }

    BigInt a, n;
    try {
      a = parse_bigint(tokens[0]);
      n = parse_bigint(tokens[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    if (n <= 0) {
      throw ParseError(lineno, "modulus must be positive, got " + tokens[1]);
    }
    classes.emplace_back(a, n);
  }
  return CoveringSystem(std::move(classes));
}

CoveringSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  return read_system(in);
}

void write_system(std::ostream& out, const CoveringSystem& system) {
  for (const auto& c : system.classes()) {
    out << c.residue().get_str(10) << ' ' << c.modulus().get_str(10) << '\n';
  }
}

std::string format_system(const CoveringSystem& system) {
  std::ostringstream out;
  write_system(out, system);
  return out.str();
}

}  // namespace covering
