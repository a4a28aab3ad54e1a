#include "spheroidal/monogenic.hpp"

#include "spheroidal/coefficients.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace sph {

namespace {

QPoly e3() { return QPoly::unit(3); }

void validate_contragenic(const HarmonicIndex& idx, int max_order) {
  if (idx.n < 1 || idx.m < 0 || idx.m > max_order || (idx.m == 0 && idx.parity == Parity::Minus))
    throw IndexError("contragenic index out of range: " + to_string(idx));
}

}  // namespace

QPoly monogenic(const HarmonicIndex& idx, const SpheroidParam& sp) {
  validate_index(idx, 1);
  return dirac(QPoly::scalar(spheroidal_solid_harmonic({idx.n + 1, idx.m, idx.parity}, sp)), true);
}

QPoly monogenic_from_garabedian(const HarmonicIndex& idx, const SpheroidParam& sp) {
  validate_index(idx, 1);
  const int n = idx.n;
  const int m = idx.m;
  const auto v = [&](int order, Parity p) { return garabedian_or_zero(n, order, p, sp); };
  if (m == 0) {
    const Rational c = make_rational(-1, n + 2);
    return QPoly(v(0, Parity::Plus), v(1, Parity::Plus) * c, v(1, Parity::Minus) * c);
  }
  const Parity p = idx.parity;
  const Parity q = flip(p);
  const Rational a(n + m + 1);
  const Rational b = make_rational(1, n + m + 2);
  const Rational half = make_rational(1, 2);
  TriPoly e1 = (v(m - 1, p) * a - v(m + 1, p) * b) * half;
  TriPoly e2 = (v(m - 1, q) * a + v(m + 1, q) * b) * half;
  if (p == Parity::Plus) e2 = -e2;
  return QPoly(v(m, p), std::move(e1), std::move(e2));
}

QPoly antimonogenic(const HarmonicIndex& idx, const SpheroidParam& sp) { return conjugate(monogenic(idx, sp)); }

QPoly ambigenic(const HarmonicIndex& idx, const SpheroidParam& sp) {
  const QPoly x = monogenic(idx, sp);
  return x - conjugate(x);
}

QPoly psi_combo(int n, int m, PsiFamily family, Parity parity, const SpheroidParam& sp) {
  const int s = family == PsiFamily::Plus ? 1 : -1;
  TriPoly e1 = garabedian_or_zero(n, m, parity, sp);
  TriPoly e2 = garabedian_or_zero(n, m, flip(parity), sp);
  if (s * sign(parity) < 0) e2 = -e2;
  return QPoly({}, std::move(e1), std::move(e2));
}

QPoly ambigenic_from_psi(const HarmonicIndex& idx, const SpheroidParam& sp) {
  validate_index(idx, 1);
  const int n = idx.n;
  const int m = idx.m;
  if (m == 0) return make_rational(-2, n + 2) * psi_combo(n, 1, PsiFamily::Plus, Parity::Plus, sp);
  return Rational(n + m + 1) * psi_combo(n, m - 1, PsiFamily::Minus, idx.parity, sp) -
         make_rational(1, n + m + 2) * psi_combo(n, m + 1, PsiFamily::Plus, idx.parity, sp);
}

// ---------------------------------------------------------------------------

Rational garabedian_radial_norm(int n, int m, const SpheroidParam& sp) {
  const TriPoly& v = garabedian_harmonic({n, m, Parity::Plus}, sp);
  SpheroidIntegrator integrator(sp);
  Rational norm = integrator.integrate_product(v, v).coeff;
  if (m == 0) norm /= 2;
  return norm;
}

Rational garabedian_norm_ratio(int n, int m, const SpheroidParam& sp) {
  if (m < 1 || m > n) throw IndexError("norm ratio needs 1 <= m <= n");
  SpheroidIntegrator integrator(sp);
  const TriPoly& upper = garabedian_harmonic({n, m + 1, Parity::Plus}, sp);
  const TriPoly& lower = garabedian_harmonic({n, m - 1, Parity::Plus}, sp);
  const Rational p2 = Rational((n + m + 1) * (n + m + 2));
  return integrator.integrate_product(upper, upper).coeff / (integrator.integrate_product(lower, lower).coeff * p2 * p2);
}

Rational nu_ratio(int n, int m, const SpheroidParam& sp) {
  if (m == 0) return 1;
  if (m >= n) return 0;
  if (m < 0) throw IndexError("nu_ratio needs m >= 0");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, Rational>, Rational> memo;
  const auto key = std::make_tuple(n, m, sp.t());
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const Rational p2 = Rational((n + m + 1) * (n + m + 2));
  Rational value = garabedian_radial_norm(n, m + 1, sp) / (garabedian_radial_norm(n, m - 1, sp) * p2 * p2);
  std::lock_guard lock(mutex);
  memo.emplace(key, value);
  return value;
}

QPoly contragenic(const HarmonicIndex& idx, const SpheroidParam& sp) {
  validate_contragenic(idx, idx.n - 1);
  if (idx.m == 0) return -qmul(ambigenic(idx, sp), e3());
  const Rational nu = nu_ratio(idx.n, idx.m, sp);
  const QPoly same = ambigenic(idx, sp);
  const QPoly other = ambigenic({idx.n, idx.m, flip(idx.parity)}, sp);
  QPoly z = (nu - 1) * other;
  const QPoly rotated = (nu + 1) * qmul(same, e3());
  if (idx.parity == Parity::Plus)
    z -= rotated;
  else
    z += rotated;
  return make_rational(1, 2) * z;
}

QPoly contragenic_from_psi(const HarmonicIndex& idx, const SpheroidParam& sp) {
  validate_contragenic(idx, idx.n + 1);
  const int n = idx.n;
  const int m = idx.m;
  if (m == 0) return make_rational(2, n + 2) * psi_combo(n, 1, PsiFamily::Plus, Parity::Minus, sp);
  const Parity q = flip(idx.parity);
  const Rational nu = nu_ratio(n, m, sp);
  return Rational(n + m + 1) * nu * psi_combo(n, m - 1, PsiFamily::Minus, q, sp) +
         make_rational(1, n + m + 2) * psi_combo(n, m + 1, PsiFamily::Plus, q, sp);
}

VzaSplit vza_split(const HarmonicIndex& idx, const SpheroidParam& sp, SplitSide side) {
  if (idx.n < 1 || idx.m < 1 || idx.m > idx.n + 1) throw IndexError("vza_split needs n >= 1, 1 <= m <= n+1");
  const int n = idx.n;
  const int m = idx.m;
  const Rational nu = nu_ratio(n, m, sp);
  const HarmonicIndex z_index{n, m, flip(idx.parity)};
  VzaSplit split;
  split.contragenic_part = m <= n - 1 ? contragenic(z_index, sp) : contragenic_from_psi(z_index, sp);
  const QPoly a = ambigenic(idx, sp);
  if (side == SplitSide::Lower) {
    split.target = psi_combo(n, m - 1, PsiFamily::Minus, idx.parity, sp);
    split.scale = Rational(1) / (Rational(n + m + 1) * (nu + 1));
    split.ambigenic_part = a;
  } else {
    split.target = psi_combo(n, m + 1, PsiFamily::Plus, idx.parity, sp);
    split.scale = Rational(n + m + 2) / (nu + 1);
    split.ambigenic_part = -nu * a;
  }
  return split;
}

ZCoefficients coef_z_decomp(int n, int m, int k, const Rational& t_target, const Rational& t_source) {
  if (n < 1 || m < 0 || m > n - 1 || k < 0) return {0, 0};
  const SpheroidParam target(t_target);
  const SpheroidParam source(t_source);
  if (m == 0) {
    if (2 * k > n - 1) return {0, 0};
    return {make_rational(n - 2 * k + 2, n + 2) * coef_w(n, 1, k, t_target, t_source), 0};
  }
  if (2 * k > n - m + 1) return {0, 0};
  const Rational w = coef_w(n, m, k, t_target, t_source);
  const Rational nu = nu_ratio(n, m, target);
  const Rational nu_src = nu_ratio(n - 2 * k, m, source);
  if (2 * k <= n - m - 1) return {(nu + 1) / (nu_src + 1) * w, (nu - nu_src) / (nu_src + 1) * w};
  return {nu / (nu_src + 1) * w, nu / (nu_src + 1) * w};
}

std::vector<ZDecompositionTerm> contragenic_decomposition(const HarmonicIndex& idx, const Rational& t_target,
                                                          const Rational& t_source) {
  validate_contragenic(idx, idx.n - 1);
  std::vector<ZDecompositionTerm> terms;
  const int top = idx.m == 0 ? idx.n - 1 : idx.n - idx.m + 1;
  for (int k = 0; 2 * k <= top; ++k) {
    const int j = idx.n - 2 * k;
    ZDecompositionTerm term;
    term.k = k;
    term.contragenic_index = {j, idx.m, idx.parity};
    term.ambigenic_index = idx.m == 0 ? term.contragenic_index : HarmonicIndex{j, idx.m, flip(idx.parity)};
    term.coeffs = coef_z_decomp(idx.n, idx.m, k, t_target, t_source);
    terms.push_back(std::move(term));
  }
  return terms;
}

QPoly assemble_decomposition(const std::vector<ZDecompositionTerm>& terms, const SpheroidParam& source) {
  QPoly sum;
  for (const auto& term : terms) {
    const HarmonicIndex& zi = term.contragenic_index;
    if (term.coeffs.contragenic != 0 && zi.m <= zi.n - 1)
      sum += term.coeffs.contragenic * contragenic(zi, source);
    // Orders m >= n - 2k have a vanishing contragenic.
    if (term.coeffs.ambigenic != 0) sum += term.coeffs.ambigenic * ambigenic(term.ambigenic_index, source);
  }
  return sum;
}

IntersectionReport intersection_report(int n, const SpheroidParam& sp) {
  if (n < 1) throw IndexError("intersection_report needs n >= 1");
  if (sp.is_ball()) throw UnsupportedRegime("intersection_report compares a spheroid with the ball; t must be nonzero");
  const SpheroidParam ball = SpheroidParam::ball();
  SpheroidIntegrator integrator(ball);
  IntersectionReport report;
  report.n = n;
  report.t = sp.t();

  const QPoly z0 = contragenic({n, 0, Parity::Plus}, sp);
  for (int j = 0; j <= n && report.part_i_holds; ++j) {
    for (const auto& xi : monogenic_indices(j)) {
      const QPoly x = monogenic(xi, ball);
      report.part_i_checks += 2;
      if (!integrator.inner_product(z0, x).is_zero() || !integrator.inner_product(z0, conjugate(x)).is_zero()) {
        report.part_i_holds = false;
        report.part_i_counterexample = xi;
        break;
      }
    }
  }

  std::vector<std::pair<HarmonicIndex, QPoly>> ball_ambigenics;
  for (int j = 0; j <= n; ++j)
    for (const auto& ai : monogenic_indices(j)) ball_ambigenics.emplace_back(ai, ambigenic(ai, ball));

  for (int m = 1; m <= n - 1; ++m) {
    for (Parity p : {Parity::Plus, Parity::Minus}) {
      const HarmonicIndex zi{n, m, p};
      const QPoly z = contragenic(zi, sp);
      IntersectionWitness witness{zi, std::nullopt, {Rational(0)}};
      for (const auto& [ai, a] : ball_ambigenics) {
        PiRational value = integrator.inner_product(z, a);
        if (!value.is_zero()) {
          witness.ambigenic_index = ai;
          witness.value = std::move(value);
          break;
        }
      }
      if (!witness.ambigenic_index) report.part_ii_holds = false;
      report.part_ii.push_back(std::move(witness));
    }
  }
  return report;
}

std::vector<HarmonicIndex> monogenic_indices(int n) {
  std::vector<HarmonicIndex> out{{n, 0, Parity::Plus}};
  for (int m = 1; m <= n + 1; ++m) {
    out.push_back({n, m, Parity::Plus});
    out.push_back({n, m, Parity::Minus});
  }
  return out;
}

std::vector<HarmonicIndex> contragenic_indices(int n) {
  std::vector<HarmonicIndex> out{{n, 0, Parity::Plus}};
  for (int m = 1; m <= n - 1; ++m) {
    out.push_back({n, m, Parity::Plus});
    out.push_back({n, m, Parity::Minus});
  }
  return out;
}

std::vector<HarmonicIndex> harmonic_indices(int n) {
  std::vector<HarmonicIndex> out{{n, 0, Parity::Plus}};
  for (int m = 1; m <= n; ++m) {
    out.push_back({n, m, Parity::Plus});
    out.push_back({n, m, Parity::Minus});
  }
  return out;
}

}  // namespace sph
