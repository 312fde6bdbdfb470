#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace numwalk {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

// Formats as "p/q", always with an explicit positive denominator ("0/1").
std::string format_rational(const Rational& r);

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r < 1; }

}  // namespace numwalk
