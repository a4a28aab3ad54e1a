#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sph {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as every constructor below is used.
using Rational = mpq_class;
using Integer = mpz_class;

/// Rational from a possibly signed machine integer ratio, canonicalized.
Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Exact power with a nonnegative integer exponent (0^0 = 1).
Rational pow(const Rational& base, unsigned exponent);

/// A half-integer value twice_value/2, used for Pochhammer bases such as
/// 1/2 and -n-1/2.
class HalfInteger {
public:
  HalfInteger() = default;
  static HalfInteger from_twice(Integer twice) { return HalfInteger(std::move(twice)); }
  static HalfInteger from_integer(const Integer& value) { return HalfInteger(2 * value); }

  const Integer& twice_value() const { return twice_; }
  Rational to_rational() const;
  bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }

  HalfInteger operator+(long delta) const { return HalfInteger(twice_ + 2 * delta); }
  HalfInteger operator-() const { return HalfInteger(-twice_); }
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;

private:
  explicit HalfInteger(Integer twice) : twice_(std::move(twice)) {}
  Integer twice_{0};
};

inline const HalfInteger kOneHalf = HalfInteger::from_twice(1);

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);
Rational pochhammer(const HalfInteger& a, unsigned n);

/// n! for n >= 0. A negative argument is a caller bug and throws
/// std::domain_error.
Integer factorial(long n);

/// Convenience: factorial as an exact Rational.
inline Rational factorial_q(long n) { return Rational(factorial(n)); }

/// (-1)^k as an int.
constexpr int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace sph
