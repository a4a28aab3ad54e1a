#include "spheroidal/exact.hpp"

#include <cctype>

namespace sph {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

Rational HalfInteger::to_rational() const {
  Rational r(twice_, Integer(2));
  r.canonicalize();
  return r;
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational result(1);
  Rational term = a;
  for (unsigned i = 0; i < n; ++i) {
    result *= term;
    term += 1;
  }
  return result;
}

Rational pochhammer(const HalfInteger& a, unsigned n) {
  // Work in doubled numerators: prod (2a + 2i) / 2^n.
  Integer num(1);
  Integer factor = a.twice_value();
  for (unsigned i = 0; i < n; ++i) {
    num *= factor;
    factor += 2;
  }
  Rational result(num);
  mpz_mul_2exp(result.get_den_mpz_t(), result.get_den_mpz_t(), n);
  result.canonicalize();
  return result;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer " + std::to_string(n));
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

}  // namespace sph
