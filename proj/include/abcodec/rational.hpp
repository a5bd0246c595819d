#pragma once

#include <gmpxx.h>

#include <string_view>

namespace abcodec {

// Arbitrary-precision integers and exact rationals, GMP-backed. Rational
// values stay canonical (gcd(num, den) = 1, den > 0) through arithmetic, so
// equality and ordering are exact everywhere they are used.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den);

// Accepts "num/den" or a bare integer literal.
Rational parse_rational(std::string_view text);

Rational rational_pow(const Rational& base, unsigned long exp);

// floor(sqrt(v)) for v >= 0.
BigInt floor_sqrt(const BigInt& v);

// ceil(r) as an integer.
BigInt ceil_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace abcodec
