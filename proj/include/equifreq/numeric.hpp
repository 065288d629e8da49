#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace equifreq {

// Arbitrary-precision integer and exact rational used everywhere. The circle
// composition group grows without bound, so fixed-width integers are not an
// option anywhere in the arithmetic core.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division for b > 0. cpp_int's operator/ truncates toward zero, which
// differs from floor for negative numerators.
BigInt floor_div(const BigInt& a, const BigInt& b);

// Nearest integer to num/den for den > 0. Exact halves round toward +infinity,
// the tie-break the Gaussian Euclidean division relies on.
BigInt round_half_up_div(const BigInt& num, const BigInt& den);

// True iff n is a perfect square; root receives floor(sqrt(n)) for n >= 0.
bool is_perfect_square(const BigInt& n, BigInt& root);

// Strict decimal-integer parse: optional sign, then digits, nothing else.
// Throws ParseError on malformed text.
BigInt parse_bigint(const std::string& text);

// "num/den" in lowest terms; the denominator is always printed.
std::string fraction_str(const Rational& q);

}  // namespace equifreq
