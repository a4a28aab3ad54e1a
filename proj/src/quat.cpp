#include "spheroidal/quat.hpp"

#include <algorithm>

namespace sph {

QPoly QPoly::unit(int i) {
  QPoly q;
  q[i] = TriPoly(1);
  return q;
}

bool QPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const TriPoly& p) { return p.is_zero(); });
}

int QPoly::degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += other.c_[i];
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= other.c_[i];
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  for (auto& p : c_) p *= s;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& p : out.c_) p = -p;
  return out;
}

namespace {

// Multiplication table: units[i] * units[j] = sign * units[index].
struct UnitProduct {
  int sign;
  int index;
};

constexpr UnitProduct kTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

}  // namespace

QPoly qmul(const QPoly& f, const QPoly& g) {
  QPoly out;
  for (int i = 0; i < 4; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (g[j].is_zero()) continue;
      const auto [sign, k] = kTable[i][j];
      TriPoly prod = f[i] * g[j];
      if (sign > 0)
        out[k] += prod;
      else
        out[k] -= prod;
    }
  }
  return out;
}

QPoly conjugate(const QPoly& f) { return QPoly(f[0], -f[1], -f[2], -f[3]); }

QPoly partial_derivative(const QPoly& f, int axis) {
  return QPoly(partial_derivative(f[0], axis), partial_derivative(f[1], axis),
               partial_derivative(f[2], axis), partial_derivative(f[3], axis));
}

QPoly dirac(const QPoly& f, bool conjugated) {
  QPoly out = partial_derivative(f, 0);
  for (int axis = 1; axis <= 2; ++axis) {
    QPoly term = qmul(QPoly::unit(axis), partial_derivative(f, axis));
    if (conjugated)
      out -= term;
    else
      out += term;
  }
  return out;
}

}  // namespace sph
