#pragma once

#include "spheroidal/exact.hpp"

#include <array>
#include <map>
#include <vector>

namespace sph {

/// Exponent triple (a, b, c) of x0^a x1^b x2^c.
struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: lower total degree first, then x0 > x1 > x2
/// (x0^2 precedes x0 x1 precedes x1^2 ...).
struct GradedLexLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
    return lhs.e > rhs.e;
  }
};

/// Sparse trivariate polynomial in (x0, x1, x2) over Rational. Zero
/// coefficients are never stored.
class TriPoly {
public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  TriPoly() = default;
  TriPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  TriPoly(long constant) : TriPoly(Rational(constant)) {}  // NOLINT

  static TriPoly variable(int axis);
  static TriPoly term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;

  /// Adds c * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  TriPoly& operator+=(const TriPoly& other);
  TriPoly& operator-=(const TriPoly& other);
  TriPoly& operator*=(const Rational& s);
  TriPoly operator-() const;

  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(TriPoly a, const Rational& s) { return a *= s; }
  friend TriPoly operator*(const Rational& s, TriPoly a) { return a *= s; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(const std::array<Rational, 3>& point) const;
  double evaluate(const std::array<double, 3>& point) const;

private:
  TermMap terms_;
};

TriPoly pow(const TriPoly& p, unsigned exponent);
TriPoly partial_derivative(const TriPoly& p, int axis);
TriPoly laplacian(const TriPoly& p);

/// Dense univariate polynomial, coefficients in ascending powers, trailing
/// zeros trimmed.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly monomial(unsigned power, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(unsigned power) const { return power < c_.size() ? c_[power] : Rational(0); }

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly derivative(unsigned order = 1) const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  /// Exact definite integral over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const;

private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace sph
