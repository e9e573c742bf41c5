#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace biplanar {

// Arbitrary-precision integer. Layout stages work on integer grids; only the
// composition stage leaves them.
using BigInt = mpz_class;

// Exact rational. mpq_class canonicalizes (lowest terms, positive
// denominator) after every arithmetic operation, which is exactly the
// normalization contract we need; construction from raw num/den must go
// through make_rational below, which canonicalizes explicitly.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
inline Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

// Serialize as "p/q" (or "p" when q == 1); parse the same formats.
std::string rat_to_string(const Rational& r);
Rational rat_from_string(const std::string& s);

// Decimal expansion with the given number of significant digits (for SVG
// output only; never round-tripped).
std::string rat_to_decimal(const Rational& r, int significant_digits);

// Number of decimal digits of |v| (0 has one digit).
std::int64_t digit_count(const BigInt& v);
// max(digits(numerator), digits(denominator)).
std::int64_t digit_count(const Rational& r);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
// Floor/ceil of a rational as integers.
BigInt rat_floor(const Rational& r);
BigInt rat_ceil(const Rational& r);

}  // namespace biplanar
