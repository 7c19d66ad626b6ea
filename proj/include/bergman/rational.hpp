#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bergman {

// All weight and distance arithmetic is exact; equality of weights is what
// drives the combinatorics, so floating point never enters the core.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "-p", "p/q" and "-p/q" with q > 0 after normalization.
// Throws invalid_input on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

}  // namespace bergman
