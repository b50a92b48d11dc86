#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mukai {

// Every scalar in the engine is an exact rational; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" form with the denominator always spelled out ("3/1", "-2/5").
std::string fraction_string(const Rational& r);

/// Human form: "p" when integral, "p/q" otherwise.
std::string pretty_string(const Rational& r);

/// Parses "p" or "p/q" with optional sign. Throws ParseError on junk or q = 0.
Rational parse_rational(std::string_view text);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace mukai
