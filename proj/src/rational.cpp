#include "biplanar/rational.hpp"

#include <stdexcept>

#include "biplanar/errors.hpp"

namespace biplanar {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InternalError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + s + "'");
  }
}

std::string rat_to_decimal(const Rational& r, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (r == 0) return "0";
  const bool negative = r < 0;
  Rational a = negative ? Rational(-r) : r;
  // Scale so that the integer part carries the requested digits, then place
  // the decimal point. exp10 = digits(int part of a).
  BigInt ip = a.get_num() / a.get_den();
  std::int64_t int_digits = (ip == 0) ? 0 : digit_count(ip);
  std::int64_t shift = significant_digits - int_digits;
  BigInt pow10 = 1;
  for (std::int64_t i = 0; i < (shift > 0 ? shift : -shift); ++i) pow10 *= 10;
  BigInt scaled;
  if (shift >= 0) {
    // round(a * 10^shift)
    Rational t = a * Rational(pow10);
    scaled = (t.get_num() * 2 + t.get_den()) / (t.get_den() * 2);
  } else {
    Rational t = a / Rational(pow10);
    scaled = (t.get_num() * 2 + t.get_den()) / (t.get_den() * 2);
  }
  std::string digits = scaled.get_str();
  std::string out;
  if (shift <= 0) {
    // Integer with -shift zeros appended.
    out = digits + std::string(static_cast<size_t>(-shift), '0');
  } else if (static_cast<std::int64_t>(digits.size()) > shift) {
    out = digits.substr(0, digits.size() - shift) + "." +
          digits.substr(digits.size() - shift);
  } else {
    out = "0." +
          std::string(static_cast<size_t>(shift) - digits.size(), '0') +
          digits;
  }
  // Trim trailing zeros after a decimal point.
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

std::int64_t digit_count(const BigInt& v) {
  BigInt a = abs(v);
  // get_str is exact; mpz_sizeinbase may overestimate by one for base 10.
  return static_cast<std::int64_t>(a.get_str().size());
}

std::int64_t digit_count(const Rational& r) {
  const std::int64_t n = digit_count(r.get_num());
  const std::int64_t d = digit_count(r.get_den());
  return n > d ? n : d;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt rat_floor(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }
BigInt rat_ceil(const Rational& r) { return ceil_div(r.get_num(), r.get_den()); }

}  // namespace biplanar
