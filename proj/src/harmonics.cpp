#include "spheroidal/harmonics.hpp"

#include "spheroidal/coefficients.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace sph {

Parity parse_parity(std::string_view text) {
  if (text == "+" || text == "plus" || text == "p") return Parity::Plus;
  if (text == "-" || text == "minus" || text == "m") return Parity::Minus;
  throw std::invalid_argument("parity must be '+' or '-', got '" + std::string(text) + "'");
}

SpheroidParam::SpheroidParam(Rational t) : t_(std::move(t)) {
  t_.canonicalize();
  if (t_ >= 1) throw std::invalid_argument("spheroid parameter t must be < 1, got " + to_string(t_));
}

std::optional<Rational> SpheroidParam::rational_mu() const {
  if (t_ < 0) return std::nullopt;
  if (!mpz_perfect_square_p(t_.get_num_mpz_t()) || !mpz_perfect_square_p(t_.get_den_mpz_t())) return std::nullopt;
  Rational mu;
  mpz_sqrt(mu.get_num_mpz_t(), t_.get_num_mpz_t());
  mpz_sqrt(mu.get_den_mpz_t(), t_.get_den_mpz_t());
  return mu;
}

void validate_index(const HarmonicIndex& idx, int max_order_excess) {
  if (idx.n < 0 || idx.m < 0 || idx.m > idx.n + max_order_excess)
    throw IndexError("index out of range: " + to_string(idx));
  if (idx.parity == Parity::Minus && idx.m == 0) throw IndexError("parity '-' requires m >= 1: " + to_string(idx));
}

std::string to_string(const HarmonicIndex& idx) {
  return "(" + std::to_string(idx.n) + "," + std::to_string(idx.m) + "," + symbol(idx.parity) + ")";
}

// ---------------------------------------------------------------------------

UniPoly legendre_polynomial(int n) {
  if (n < 0) throw IndexError("Legendre degree must be >= 0");
  UniPoly prev(std::vector<Rational>{1});
  if (n == 0) return prev;
  UniPoly cur = UniPoly::monomial(1);
  const UniPoly x = UniPoly::monomial(1);
  for (int k = 1; k < n; ++k) {
    UniPoly next = (x * cur) * make_rational(2 * k + 1, k + 1) - prev * make_rational(k, k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly legendre_derivative(int n, int m) {
  if (m < 0 || m > n) throw IndexError("Legendre order out of range");
  return legendre_polynomial(n).derivative(static_cast<unsigned>(m));
}

namespace {

void check_regime(bool inside, LegendreRegime regime) {
  if (!inside)
    throw UnsupportedRegime(regime == LegendreRegime::Interval ? "argument outside [-1, 1]"
                                                               : "argument outside [1, inf)");
}

}  // namespace

double assoc_legendre(int n, int m, double x, LegendreRegime regime) {
  if (n < 0 || m < 0 || m > n) throw IndexError("associated Legendre index out of range");
  check_regime(regime == LegendreRegime::Interval ? std::abs(x) <= 1.0 : x >= 1.0, regime);
  const double w = regime == LegendreRegime::Interval ? std::sqrt(std::max(0.0, 1.0 - x * x))
                                                      : std::sqrt(std::max(0.0, x * x - 1.0));
  const double phase = (regime == LegendreRegime::Interval && m % 2 != 0) ? -1.0 : 1.0;
  // P_m^m = (2m-1)!! w^m, then (k-m) P_k = (2k-1) x P_{k-1} - (k+m-1) P_{k-2}.
  double pmm = phase;
  for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * w;
  if (n == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (n == m + 1) return pm1;
  double pk = 0.0;
  for (int k = m + 2; k <= n; ++k) {
    pk = ((2.0 * k - 1.0) * x * pm1 - (k + m - 1.0) * pmm) / (k - m);
    pmm = pm1;
    pm1 = pk;
  }
  return pk;
}

std::optional<Rational> assoc_legendre_exact(int n, int m, const Rational& x, LegendreRegime regime) {
  check_regime(regime == LegendreRegime::Interval ? abs(x) <= 1 : x >= 1, regime);
  const Rational base = regime == LegendreRegime::Interval ? Rational(1 - x * x) : Rational(x * x - 1);
  if (m % 2 != 0) {
    if (base != 0) return std::nullopt;
    return Rational(0);
  }
  return legendre_derivative(n, m).evaluate(x) * pow(base, static_cast<unsigned>(m / 2));
}

Rational assoc_legendre_product(int n, int k, int m, const Rational& x, LegendreRegime regime) {
  check_regime(regime == LegendreRegime::Interval ? abs(x) <= 1 : x >= 1, regime);
  const Rational base = regime == LegendreRegime::Interval ? Rational(1 - x * x) : Rational(x * x - 1);
  // The Condon-Shortley phases square away.
  return legendre_derivative(n, m).evaluate(x) * legendre_derivative(k, m).evaluate(x) *
         pow(base, static_cast<unsigned>(m));
}

// ---------------------------------------------------------------------------

namespace {

// Re or Im of (x1 + i x2)^m.
TriPoly angular_factor(int m, Parity parity) {
  TriPoly out;
  Integer binom(1);
  for (int k = 0; k <= m; ++k) {
    if (k > 0) binom = binom * (m - k + 1) / k;
    const bool real_term = k % 2 == 0;
    if (real_term == (parity == Parity::Plus)) {
      const int s = (parity == Parity::Plus) ? sign_power(k / 2) : sign_power((k - 1) / 2);
      out.add_term(Monomial{{0, m - k, k}}, Rational(binom * s));
    }
  }
  return out;
}

using CacheKey = std::tuple<int, int, int, int, Rational>;  // kind, n, m, parity, t

struct HarmonicCache {
  std::mutex mutex;
  std::map<CacheKey, TriPoly> entries;
};

HarmonicCache& cache() {
  static HarmonicCache instance;
  return instance;
}

template <typename Build>
const TriPoly& memoized(int kind, const HarmonicIndex& idx, const Rational& t, Build&& build) {
  CacheKey key{kind, idx.n, idx.m, sign(idx.parity), t};
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
  }
  // Built outside the lock: construction recurses into the cache.
  TriPoly value = build();
  std::lock_guard lock(c.mutex);
  return c.entries.try_emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

TriPoly spherical_solid_harmonic(const HarmonicIndex& idx) {
  validate_index(idx);
  const int n = idx.n;
  const int m = idx.m;
  // r^n P_n^m(x0/r) = (-1)^m rho^m * sum_j a_j x0^j r^{n-m-j}, where
  // P_n^{(m)}(s) = sum_j a_j s^j has only terms with j = n-m (mod 2).
  const UniPoly deriv = legendre_derivative(n, m);
  const TriPoly r2 = TriPoly::term(Monomial{{2, 0, 0}}, 1) + TriPoly::term(Monomial{{0, 2, 0}}, 1) +
                     TriPoly::term(Monomial{{0, 0, 2}}, 1);
  TriPoly axial;
  for (int j = 0; j <= deriv.degree(); ++j) {
    const Rational& a = deriv.coeffs()[static_cast<std::size_t>(j)];
    if (a == 0) continue;
    axial += TriPoly::term(Monomial{{j, 0, 0}}, a) * pow(r2, static_cast<unsigned>((n - m - j) / 2));
  }
  TriPoly u = axial * angular_factor(m, idx.parity);
  if (m % 2 != 0) u = -u;
  return u;
}

const TriPoly& spheroidal_solid_harmonic(const HarmonicIndex& idx, const SpheroidParam& sp) {
  validate_index(idx);
  return memoized(0, idx, sp.t(), [&] {
    TriPoly u;
    for (int k = 0; 2 * k <= idx.n - idx.m; ++k) {
      const Rational c = coef_u_to_u(idx.n, idx.m, k) * pow(sp.t(), static_cast<unsigned>(k));
      u += spherical_solid_harmonic({idx.n - 2 * k, idx.m, idx.parity}) * c;
    }
    return u;
  });
}

TriPoly spheroidal_harmonic_by_extension(const HarmonicIndex& idx, const SpheroidParam& sp) {
  validate_index(idx);
  const int n = idx.n;
  const int m = idx.m;
  const UniPoly deriv = legendre_derivative(n, m);
  Rational scale = factorial_q(n - m) / (pochhammer(kOneHalf, static_cast<unsigned>(n)) * pow(Rational(2), n)) *
                   deriv.evaluate(Rational(1)) * sign_power(m);
  // mu^{n-m} P^{(m)}(x0/mu) = sum_j a_j x0^j t^{(n-m-j)/2}.
  std::vector<Rational> profile(static_cast<std::size_t>(n - m + 1));
  for (int j = 0; j <= deriv.degree(); ++j)
    profile[static_cast<std::size_t>(j)] =
        scale * deriv.coefficient(static_cast<unsigned>(j)) * pow(sp.t(), static_cast<unsigned>((n - m - j) / 2));
  UniPoly g(std::move(profile));
  const TriPoly rho2 = TriPoly::term(Monomial{{0, 2, 0}}, 1) + TriPoly::term(Monomial{{0, 0, 2}}, 1);
  TriPoly radial;
  TriPoly rho_power(1);
  for (int j = 0; g.degree() >= 0; ++j) {
    for (int i = 0; i <= g.degree(); ++i)
      radial += TriPoly::term(Monomial{{i, 0, 0}}, g.coefficient(static_cast<unsigned>(i))) * rho_power;
    rho_power = rho_power * rho2;
    g = g.derivative(2) * (Rational(-1) / (Rational(4 * (j + 1)) * (j + m + 1)));
  }
  return radial * angular_factor(m, idx.parity);
}

const TriPoly& garabedian_harmonic(const HarmonicIndex& idx, const SpheroidParam& sp) {
  validate_index(idx, 1);
  return memoized(1, idx, sp.t(), [&] {
    return partial_derivative(spheroidal_solid_harmonic({idx.n + 1, idx.m, idx.parity}, sp), 0);
  });
}

TriPoly garabedian_or_zero(int n, int m, Parity parity, const SpheroidParam& sp) {
  if (n < 0 || m < 0 || m > n + 1 || (m == 0 && parity == Parity::Minus)) return {};
  return garabedian_harmonic({n, m, parity}, sp);
}

std::array<double, 3> prolate_to_cartesian(const SpheroidParam& sp, double u, double v, double phi) {
  if (!sp.is_prolate()) throw UnsupportedRegime("spheroidal coordinates require a prolate parameter 0 < t < 1");
  const double mu = std::sqrt(sp.t().get_d());
  return {mu * std::cos(u) * std::cosh(v), mu * std::sin(u) * std::sinh(v) * std::cos(phi),
          mu * std::sin(u) * std::sinh(v) * std::sin(phi)};
}

double eval_via_coords(const HarmonicIndex& idx, const SpheroidParam& sp, double u, double v, double phi) {
  validate_index(idx);
  if (!sp.is_prolate()) throw UnsupportedRegime("coordinate evaluation requires a prolate parameter 0 < t < 1");
  const double mu = std::sqrt(sp.t().get_d());
  const Rational scale = factorial_q(idx.n - idx.m) /
                         (pow(Rational(2), static_cast<unsigned>(idx.n)) * pochhammer(kOneHalf, static_cast<unsigned>(idx.n)));
  const double angular = idx.parity == Parity::Plus ? std::cos(idx.m * phi) : std::sin(idx.m * phi);
  return scale.get_d() * std::pow(mu, idx.n) * assoc_legendre(idx.n, idx.m, std::cos(u), LegendreRegime::Interval) *
         assoc_legendre(idx.n, idx.m, std::cosh(v), LegendreRegime::Outside) * angular;
}

}  // namespace sph
