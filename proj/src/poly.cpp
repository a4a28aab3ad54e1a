#include "spheroidal/poly.hpp"

#include <cmath>

namespace sph {

TriPoly::TriPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

TriPoly TriPoly::variable(int axis) {
  Monomial m;
  m.e.at(static_cast<std::size_t>(axis)) = 1;
  return term(m, 1);
}

TriPoly TriPoly::term(const Monomial& m, const Rational& c) {
  TriPoly p;
  p.add_term(m, c);
  return p;
}

int TriPoly::degree() const {
  // Graded order: the last key has maximal total degree.
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

Rational TriPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TriPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TriPoly& TriPoly::operator+=(const TriPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

TriPoly TriPoly::operator-() const {
  TriPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly out;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}};
      prod = ca * cb;
      out.add_term(m, prod);
    }
  }
  return out;
}

Rational TriPoly::evaluate(const std::array<Rational, 3>& point) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < 3; ++i) v *= sph::pow(point[i], static_cast<unsigned>(m.e[i]));
    sum += v;
  }
  return sum;
}

double TriPoly::evaluate(const std::array<double, 3>& point) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.get_d();
    for (std::size_t i = 0; i < 3; ++i) v *= std::pow(point[i], m.e[i]);
    sum += v;
  }
  return sum;
}

TriPoly pow(const TriPoly& p, unsigned exponent) {
  TriPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * p;
  return result;
}

TriPoly partial_derivative(const TriPoly& p, int axis) {
  const auto ax = static_cast<std::size_t>(axis);
  TriPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.e[ax] == 0) continue;
    Monomial d = m;
    d.e[ax] -= 1;
    out.add_term(d, c * m.e[ax]);
  }
  return out;
}

TriPoly laplacian(const TriPoly& p) {
  TriPoly out;
  for (int axis = 0; axis < 3; ++axis) out += partial_derivative(partial_derivative(p, axis), axis);
  return out;
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative(unsigned order) const {
  std::vector<Rational> cur = c_;
  for (unsigned k = 0; k < order && !cur.empty(); ++k) {
    std::vector<Rational> next;
    for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i] * static_cast<long>(i));
    cur = std::move(next);
  }
  return UniPoly(std::move(cur));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Rational UniPoly::integrate(const Rational& lo, const Rational& hi) const {
  Rational total(0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto p = static_cast<unsigned>(i + 1);
    total += c_[i] * (sph::pow(hi, p) - sph::pow(lo, p)) / static_cast<long>(p);
  }
  return total;
}

}  // namespace sph
