#pragma once

#include "borelhilb/hilbert_poly.hpp"
#include "borelhilb/macaulay.hpp"

#include <string>

namespace borel {

/// Parses expressions in t built from integers, +, -, *, /, ^, parentheses,
/// binom(expr, k) and Q-notation literals such as "Q(2,1;3,1)+1".
/// Juxtaposition multiplies ("3t+1", "2binom(t+2,2)-1"). Whitespace is ignored.
/// Division is only by a nonzero constant; exponents are nonnegative integers.
/// Throws ParseError with the 0-based offset of the offending character.
HilbertPoly parse_poly(const std::string& text);

/// Parses a bare "Q(i_1,...;a_1,...)" literal with optional "+c" suffix.
QNotation parse_q(const std::string& text);

} // namespace borel
