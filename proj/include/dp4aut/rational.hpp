#pragma once

// Exact arbitrary-precision rational arithmetic.
//
// Rat is an alias for boost::multiprecision::cpp_rational, which keeps
// values in canonical reduced form with a positive denominator.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dp4aut {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "n" or "n/m" with an optional leading sign. Throws ParseError on
// malformed input or a zero denominator.
Rat parse_rat(const std::string& text);

// Formats as "n" when the denominator is 1, otherwise "n/m".
std::string format_rat(const Rat& r);

}  // namespace dp4aut
