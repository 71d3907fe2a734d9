#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace flagcurve::exact {

// GMP rationals are kept canonical by every arithmetic operation; the only
// way to obtain a non-canonical value is raw num/den construction, which
// make_rational() and parse_rational() canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" and plain decimals such as "0.125" or "-1.5e-2".
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Fixed-point rendering with `digits` fractional digits, rounded half away from zero.
std::string to_decimal(const Rational& q, int digits);

int sign(const Rational& q);
Rational abs(const Rational& q);

// 2^e as a rational, e may be negative.
Rational pow2(int e);

double to_double(const Rational& q);

}  // namespace flagcurve::exact
