#pragma once
// Exact rational arithmetic. All averaging and LYM computations stay in
// exact fractions; floating point only appears in the decimal rendering
// attached next to the exact value for human consumption.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace katona {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) as an exact big integer; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

// n! as an exact big integer. Requires n >= 0.
BigInt factorial(int n);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string fraction_string(const Rational& r);

// Fixed-point decimal rendering, correctly rounded toward zero.
std::string decimal_string(const Rational& r, int digits = 6);

// Parses "p", "-p", or "p/q". Throws DomainError on malformed input or q == 0.
Rational rational_from_string(std::string_view s);

} // namespace katona
