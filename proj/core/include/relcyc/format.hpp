#pragma once

#include <iosfwd>
#include <string>

#include "relcyc/intpoly.hpp"

namespace relcyc {

/* Canonical display form: descending degree with explicit signs and
 * implicit multiplication, e.g. "x^4 + 1" or "x^2 - 2x - 1". Re-parsing
 * the output always reproduces the polynomial. */
std::string to_string(const IntPoly& p);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace relcyc
