#include "gon/rational.hpp"

#include <cctype>

#include "gon/error.hpp"

namespace gon {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer parse_integer(std::string_view text) {
  const std::string_view s = trim(text);
  if (!is_decimal_integer(s)) {
    throw InvalidInput("malformed integer '" + std::string(text) + "'");
  }
  return integer_from(s);
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(s)) {
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    return Rational(integer_from(s));
  }
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  const Integer d = integer_from(den);
  if (d == 0) throw InvalidInput("zero denominator in rational '" + std::string(text) + "'");
  return make_rational(integer_from(num), d);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer round_nearest(const Rational& value) {
  const Rational shifted = value + Rational(1, 2);
  return floor(shifted);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer isqrt(const Integer& n) {
  if (n < 0) throw InvalidInput("square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer floor_sqrt(const Rational& q) {
  if (q < 0) throw InvalidInput("square root of a negative rational");
  // sqrt(p/r) = sqrt(p*r)/r and floor(x/r) = floor(floor(x)/r) for integer r > 0.
  const Integer pr = q.get_num() * q.get_den();
  Integer out;
  const Integer root = isqrt(pr);
  mpz_fdiv_q(out.get_mpz_t(), root.get_mpz_t(), q.get_den_mpz_t());
  return out;
}

IntRange integer_range(const Rational& center, const Rational& bound) {
  if (bound < 0) return {Integer(1), Integer(0)};
  const Integer s = floor_sqrt(bound);
  const Integer c = floor(center);
  Integer lo = c - s - 1;
  Integer hi = c + s + 1;
  auto inside = [&](const Integer& z) {
    const Rational diff = Rational(z) - center;
    return diff * diff <= bound;
  };
  while (lo <= hi && !inside(lo)) ++lo;
  while (hi >= lo && !inside(hi)) --hi;
  return {lo, hi};
}

}  // namespace gon
