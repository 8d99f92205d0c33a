#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symquot {

// All scalar quantities (radii, momentum levels, matrix entries) are exact
// rationals, always reduced with positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical rendering: "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

// Accepts "p", "-p" and "p/q". Throws ValidationError on anything else
// (including q = 0).
Rational parse_rational(const std::string& text);

} // namespace symquot
