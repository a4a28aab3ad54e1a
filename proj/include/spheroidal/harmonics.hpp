#pragma once

#include "spheroidal/errors.hpp"
#include "spheroidal/poly.hpp"

#include <array>
#include <optional>
#include <string>

namespace sph {

/// Parity of the angular factor: '+' is cos(m phi), '-' is sin(m phi).
enum class Parity { Plus, Minus };

constexpr int sign(Parity p) { return p == Parity::Plus ? 1 : -1; }
constexpr Parity flip(Parity p) { return p == Parity::Plus ? Parity::Minus : Parity::Plus; }
constexpr char symbol(Parity p) { return p == Parity::Plus ? '+' : '-'; }
Parity parse_parity(std::string_view text);

/// Squared eccentricity parameter t = mu^2 of the spheroid
/// x0^2 + (x1^2 + x2^2)/(1 - t) < 1. t in (0,1) prolate, 0 ball, t < 0 oblate.
class SpheroidParam {
public:
  explicit SpheroidParam(Rational t);
  static SpheroidParam ball() { return SpheroidParam(Rational(0)); }

  const Rational& t() const { return t_; }
  bool is_ball() const { return t_ == 0; }
  bool is_prolate() const { return t_ > 0; }
  bool is_oblate() const { return t_ < 0; }
  /// mu = sqrt(t) when it is rational (t a rational square, t >= 0).
  std::optional<Rational> rational_mu() const;

  friend bool operator==(const SpheroidParam&, const SpheroidParam&) = default;

private:
  Rational t_;
};

/// (n, m, parity) with 0 <= m <= n, and m >= 1 for the '-' parity.
struct HarmonicIndex {
  int n = 0;
  int m = 0;
  Parity parity = Parity::Plus;

  friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;
};

/// Throws IndexError unless 0 <= m <= n + max_order_excess and the parity
/// rule holds.
void validate_index(const HarmonicIndex& idx, int max_order_excess = 0);

std::string to_string(const HarmonicIndex& idx);

// --- Legendre functions ---------------------------------------------------

enum class LegendreRegime {
  Interval,  ///< x in [-1, 1], Condon-Shortley phase (-1)^m (1-x^2)^{m/2}
  Outside,   ///< x in (1, inf), positive branch (x^2-1)^{m/2}
};

/// Legendre polynomial P_n via the Bonnet recurrence.
UniPoly legendre_polynomial(int n);

/// m-th derivative of P_n.
UniPoly legendre_derivative(int n, int m);

/// Floating P_n^m(x) by the standard upward recurrence in n.
double assoc_legendre(int n, int m, double x, LegendreRegime regime);

/// Exact P_n^m(x) when rational: m even (or x = +-1). nullopt otherwise.
std::optional<Rational> assoc_legendre_exact(int n, int m, const Rational& x, LegendreRegime regime);

/// Exact P_n^m(x) P_k^m(x); the square roots pair up into (+-(1 - x^2))^m.
Rational assoc_legendre_product(int n, int k, int m, const Rational& x, LegendreRegime regime);

// --- Harmonic polynomials -------------------------------------------------

/// |x|^n P_n^m(x0/|x|) Phi_m^{+-}(phi) as an exact polynomial.
TriPoly spherical_solid_harmonic(const HarmonicIndex& idx);

/// U_{n,m}[t] = sum_{0<=2k<=n-m} c_{n,m,k} t^k U_{n-2k,m}[0]. Memoized.
const TriPoly& spheroidal_solid_harmonic(const HarmonicIndex& idx, const SpheroidParam& sp);

/// U_{n,m}[t] rebuilt from its restriction to the x0 axis, which the
/// spheroidal-coordinate product fixes as
///   (n-m)!/(2^n (1/2)_n) (-1)^m P_n^{(m)}(1) mu^{n-m} P_n^{(m)}(x0/mu),
/// extended off the axis as Phi_m * sum_j g_j(x0) rho^{2j} with
/// g_{j+1} = -g_j'' / (4 (j+1)(j+m+1)). Independent of the coefficient
/// tables; used to cross-check spheroidal_solid_harmonic. Not memoized.
TriPoly spheroidal_harmonic_by_extension(const HarmonicIndex& idx, const SpheroidParam& sp);

/// V_{n,m}[t] = d/dx0 U_{n+1,m}[t]; accepts 0 <= m <= n+1 (zero at m = n+1).
const TriPoly& garabedian_harmonic(const HarmonicIndex& idx, const SpheroidParam& sp);

/// Same as garabedian_harmonic but returns 0 for m < 0, for m > n+1, and
/// for (m = 0, '-'); used where formulas reference neighbouring orders.
TriPoly garabedian_or_zero(int n, int m, Parity parity, const SpheroidParam& sp);

/// Cartesian point for prolate spheroidal coordinates (u, v, phi).
std::array<double, 3> prolate_to_cartesian(const SpheroidParam& sp, double u, double v, double phi);

/// U_{n,m}[t] evaluated through prolate spheroidal coordinates:
/// (n-m)!/(2^n (1/2)_n) mu^n P_n^m(cos u) P_n^m(cosh v) Phi_m(phi).
/// Throws UnsupportedRegime unless 0 < t < 1.
double eval_via_coords(const HarmonicIndex& idx, const SpheroidParam& sp, double u, double v, double phi);

}  // namespace sph
