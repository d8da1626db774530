#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mcd {

// Exact arbitrary-precision rational. Everything LP-related runs on these so
// that zero tests and duality checks are exact, never epsilon-based.
using Rat = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_fraction(const Rat& r);

// Accepts "p" and "p/q"; throws ParseError on anything else.
Rat parse_fraction(std::string_view s);

} // namespace mcd
