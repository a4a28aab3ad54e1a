#pragma once

#include "spheroidal/harmonics.hpp"
#include "spheroidal/quat.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace sph {

/// An exact value coeff * pi. Every solid integral of a polynomial over a
/// spheroid has this form.
struct PiRational {
  Rational coeff;

  double value() const;
  PiRational& operator+=(const PiRational& o) {
    coeff += o.coeff;
    return *this;
  }
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator*(const Rational& s, const PiRational& a) { return {s * a.coeff}; }
  friend bool operator==(const PiRational&, const PiRational&) = default;
  bool is_zero() const { return coeff == 0; }
  bool is_positive() const { return coeff > 0; }
};

std::string to_string(const PiRational& value);

/// Integral of x0^a x1^b x2^c over the spheroid. Zero unless all exponents
/// are even; otherwise (1-t)^{(b+c)/2+1} times the unit-ball moment.
PiRational monomial_integral(int a, int b, int c, const SpheroidParam& sp);

/// Integrator bound to one spheroid; caches monomial moments. Not
/// thread-safe: use one instance per thread.
class SpheroidIntegrator {
public:
  explicit SpheroidIntegrator(SpheroidParam sp) : sp_(std::move(sp)) {}

  const SpheroidParam& param() const { return sp_; }
  const Rational& moment(int a, int b, int c);

  PiRational integrate(const TriPoly& p);
  /// Integral of p*q computed term pairwise without forming the product.
  PiRational integrate_product(const TriPoly& p, const TriPoly& q);
  /// <f, g> = integral of Sc(conj(f) g) = sum_i integral f_i g_i.
  PiRational inner_product(const QPoly& f, const QPoly& g);

private:
  SpheroidParam sp_;
  std::unordered_map<long, Rational> moments_;
};

PiRational inner_product(const QPoly& f, const QPoly& g, const SpheroidParam& sp);

/// Symmetric matrix of inner products; entries are pi coefficients.
struct GramMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> entries;

  std::size_t size() const { return entries.size(); }
  bool is_diagonal() const;
  bool has_positive_diagonal() const;
  std::size_t rank() const;
};

struct LabeledQPoly {
  std::string label;
  QPoly value;
};

GramMatrix gram(const std::vector<LabeledQPoly>& elements, const SpheroidParam& sp);

/// Matrix of <a_i, b_j> for two families.
std::vector<std::vector<Rational>> cross_gram(const std::vector<QPoly>& rows, const std::vector<QPoly>& cols,
                                              SpheroidIntegrator& integrator);

/// Exact rank by Gaussian elimination over Rational.
std::size_t exact_rank(std::vector<std::vector<Rational>> matrix);

/// Dimension of { h in span(basis) : <h, c> = 0 for all c in constraints },
/// assuming `basis` is linearly independent.
std::size_t orthogonal_complement_dimension(const std::vector<QPoly>& basis, const std::vector<QPoly>& constraints,
                                            const SpheroidParam& sp);

/// Closed form of ||V_{n,m}||^2 over a prolate spheroid with rational mu:
/// (1 + delta_{0,m})/2 * kappa_{n,m} * pi * mu^{2n+3} * int_1^{1/mu} P_n^m P_{n+2}^m,
/// kappa_{n,m} = (n+m+1)(n+m+1)!(n-m+2)! / (2^{2n+1} (1/2)_{n+1} (1/2)_{n+2}).
/// Throws UnsupportedRegime when mu is not rational and positive.
PiRational garabedian_norm_closed_form(int n, int m, Parity parity, const SpheroidParam& sp);

}  // namespace sph
