#pragma once

// Generating-vector files:
//
//   b m d
//   <g_1 as decimal polynomial index>
//   ...
//   <g_d>
//   # optional comment lines, e.g. "# weights=poly:2" or "# modulus=19"
//
// A "# modulus=<index>" comment selects a modulus other than x^m.

#include <iosfwd>
#include <string>
#include <vector>

#include "polylat/cbc_dbd.hpp"

namespace polylat {

struct VectorFile {
  GeneratingVector vector;
  /// Comment lines without the leading '#' and following space.
  std::vector<std::string> comments;
};

/// Writes the vector; a modulus comment is added when the modulus is not x^m
/// or when always_write_modulus is set.
void write_vector_file(std::ostream& out, const GeneratingVector& g,
                       const std::vector<std::string>& comments = {},
                       bool always_write_modulus = false);

/// Throws ParseError (position = 1-based line number) on malformed input.
VectorFile read_vector_file(std::istream& in);

}  // namespace polylat
