#pragma once

#include <string_view>

#include "relcyc/intpoly.hpp"

namespace relcyc {

/* Parses a polynomial expression: signed terms joined by '+'/'-', each
 * term an integer, an integer times a power ('*' optional, so both
 * "3*x^5" and the compact "3x^5" work), or a bare power "x"/"x^e".
 * Whitespace is insignificant; integer literals have arbitrary size.
 * Throws ParseError with the offending position and the expected tokens. */
IntPoly parse_poly(std::string_view text);

}  // namespace relcyc
