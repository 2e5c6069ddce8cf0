#pragma once

#include <string>

#include "buffon/complex.hpp"
#include "buffon/linalg.hpp"

namespace buffon {

struct OffData {
  PolyhedralComplex complex;
  Matrix coords;  // n x 3
};

// ASCII OFF: "OFF" header, "V F E" counts, V coordinate lines, F face lines
// "k i1 .. ik". Blank lines and '#' comments are skipped; the E field is
// ignored on input (common practice). ParseError carries the line number;
// the assembled complex goes through full validation.
OffData parse_off(const std::string& text);

// Deterministic writer: 17 significant digits, single spaces, LF endings.
// Round-trips bit-exactly through parse_off. DimensionError unless d = 3.
std::string write_off(const Matrix& coords, const PolyhedralComplex& complex);

}  // namespace buffon
