#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "argen/algebra.hpp"

namespace argen {

// Parsed description of an algebra input file. Grammar (one directive per
// line, '#' starts a comment):
//   prime <p>
//   vertices <n>
//   arrow <label>: <i> -> <j>       (1-based vertices)
//   bound <L>
//   relation <term> [+|- <term>]... with <term> = [<int>*]<label>[*<label>]...
struct AlgFile {
  std::uint32_t prime = 2;
  int bound = 3;
  Quiver quiver;
  std::vector<Relation> relations;
};

// Both throw std::runtime_error with a line-numbered message on bad input.
AlgFile parse_alg(std::istream& in, const std::string& origin = "<input>");
AlgFile parse_alg_file(const std::string& path);

// p = 0 keeps the prime given in the file.
AlgebraPtr build_algebra(const AlgFile& f, std::uint32_t p = 0);

}  // namespace argen
