#pragma once

#include "spheroidal/poly.hpp"

#include <array>

namespace sph {

/// Quaternion-valued polynomial: components on 1, e1, e2, e3.
/// A value is reduced (R^3-valued) when the e3 component vanishes.
class QPoly {
public:
  QPoly() = default;
  QPoly(TriPoly s, TriPoly v1, TriPoly v2, TriPoly v3 = {})
      : c_{std::move(s), std::move(v1), std::move(v2), std::move(v3)} {}
  static QPoly scalar(TriPoly s) { return QPoly(std::move(s), {}, {}, {}); }
  /// The unit e_i (i = 0 gives 1).
  static QPoly unit(int i);

  const TriPoly& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  TriPoly& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }

  const TriPoly& sc() const { return c_[0]; }
  TriPoly& sc() { return c_[0]; }
  /// Vector part (s component cleared).
  QPoly vec() const { return QPoly({}, c_[1], c_[2], c_[3]); }

  bool is_reduced() const { return c_[3].is_zero(); }
  bool is_zero() const;
  int degree() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const Rational& s);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

private:
  std::array<TriPoly, 4> c_;
};

/// Full quaternion product with e1^2 = e2^2 = e3^2 = -1, e1 e2 = e3,
/// e2 e3 = e1, e3 e1 = e2.
QPoly qmul(const QPoly& f, const QPoly& g);

/// s unchanged; e1, e2, e3 components negated.
QPoly conjugate(const QPoly& f);

/// Left Dirac operator: sum_i u_i * (df/dx_i) with u = (1, e1, e2), or
/// (1, -e1, -e2) when `conjugated` (the operator written with a bar).
QPoly dirac(const QPoly& f, bool conjugated);

/// Componentwise partial derivative.
QPoly partial_derivative(const QPoly& f, int axis);

}  // namespace sph
