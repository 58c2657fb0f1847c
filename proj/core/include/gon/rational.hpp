#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gon {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws InvalidInput when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
// Nearest integer, ties rounded up: floor(x + 1/2).
Integer round_nearest(const Rational& value);

bool is_integer(const Rational& value);

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
// floor(sqrt(q)) for rational q >= 0, exact.
Integer floor_sqrt(const Rational& q);

// Closed integer interval; empty when lo > hi.
struct IntRange {
  Integer lo;
  Integer hi;
  bool empty() const { return lo > hi; }
  Integer size() const { return empty() ? Integer(0) : Integer(hi - lo + 1); }
};

// All integers z with (z - center)^2 <= bound, decided exactly.
// A negative bound yields an empty range.
IntRange integer_range(const Rational& center, const Rational& bound);

}  // namespace gon
