#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bmenet {

// All arithmetic in the library is exact: big integers for counting,
// big rationals everywhere a division can occur.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int pow2(unsigned exponent);
Int factorial(unsigned m);
// m!! with the empty products 0!! = (-1)!! = 1.
Int double_factorial(int m);
Int binomial(unsigned m, unsigned r);

// Accepts integers ("7", "-3"), finite decimals ("0.25"), and fractions
// ("3/4", "-7/10").
Rational parse_rational(std::string_view text);

// Shortest exact form: integer, finite decimal when the reduced denominator
// divides a power of ten, otherwise "p/q".
std::string rational_to_string(const Rational& value);

}  // namespace bmenet
