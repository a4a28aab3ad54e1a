#include "oracles.hpp"

#include "spheroidal/coefficients.hpp"
#include "spheroidal/errors.hpp"
#include "spheroidal/monogenic.hpp"

#include <doctest.h>

using namespace sph;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

const std::vector<Rational> kSweep{0, q(1, 4), q(9, 16), -1, -3};

const TriPoly x0 = TriPoly::variable(0);
const TriPoly x1 = TriPoly::variable(1);
const TriPoly x2 = TriPoly::variable(2);

Rational iprod(const QPoly& a, const QPoly& b, const Rational& t) { return oracle::inner_product(a, b, t); }

/// Oracle Garabedian harmonic with the sign (-1)^m folded in when flip is set;
/// zero outside 0 <= m <= n.
TriPoly vorc(int n, int m, bool plus, const Rational& t, bool flip) {
  if (m < 0 || m > n || (m == 0 && !plus)) return {};
  TriPoly v = oracle::garabedian_harmonic(n, m, plus, t);
  return (flip && m % 2 != 0) ? -v : v;
}

/// The explicit V-combination of the monogenic, assembled from oracle pieces.
QPoly explicit_formula(int n, int m, bool plus, const Rational& t, bool flip) {
  if (m == 0) {
    const Rational s = q(-1, n + 2);
    return QPoly(vorc(n, 0, true, t, flip), s * vorc(n, 1, true, t, flip), s * vorc(n, 1, false, t, flip));
  }
  const Rational a(n + m + 1), b = q(1, n + m + 2), h = q(1, 2);
  const TriPoly e1 = h * (a * vorc(n, m - 1, plus, t, flip) - b * vorc(n, m + 1, plus, t, flip));
  TriPoly e2 = h * (a * vorc(n, m - 1, !plus, t, flip) + b * vorc(n, m + 1, !plus, t, flip));
  if (plus) e2 = -e2;
  return QPoly(vorc(n, m, plus, t, flip), e1, e2);
}

/// Radial norm of V_{n,m}^+ from oracle integration.
Rational radial_norm(int n, int m, const Rational& t) {
  const TriPoly v = oracle::garabedian_harmonic(n, m, true, t);
  const Rational full = oracle::integrate(v * v, t);
  return m == 0 ? full / 2 : full;
}

}  // namespace

TEST_CASE("low-degree monogenics") {
  for (const auto& t : kSweep) {
    const SpheroidParam sp(t);
    CHECK(monogenic({0, 0, Parity::Plus}, sp) == QPoly::scalar(1));
    CHECK(monogenic({1, 0, Parity::Plus}, sp) == QPoly(Rational(2) * x0, x1, x2));
    CHECK(antimonogenic({1, 0, Parity::Plus}, sp) == QPoly(Rational(2) * x0, -x1, -x2));
    CHECK(ambigenic({1, 0, Parity::Plus}, sp) == QPoly({}, Rational(2) * x1, Rational(2) * x2));
  }
}

TEST_CASE("monogenics match the oracle and the explicit formula") {
  for (const auto& t : kSweep) {
    const SpheroidParam sp(t);
    for (int n = 0; n <= 5; ++n)
      for (const auto& idx : monogenic_indices(n)) {
        const bool plus = idx.parity == Parity::Plus;
        const QPoly x = monogenic(idx, sp);
        CHECK(x == oracle::monogenic(n, idx.m, plus, t));
        CHECK(x == explicit_formula(n, idx.m, plus, t, false));
        CHECK(x == monogenic_from_garabedian(idx, sp));
        CHECK(dirac(x, false).is_zero());
        CHECK(dirac(antimonogenic(idx, sp), true).is_zero());
        CHECK(x.sc() == vorc(n, idx.m, plus, t, false));
        CHECK(ambigenic(idx, sp) == x - conjugate(x));
        CHECK(ambigenic(idx, sp) == ambigenic_from_psi(idx, sp));
      }
  }
}

TEST_CASE("the alternate Legendre phase breaks the explicit formula") {
  const Rational t = q(1, 4);
  bool any_mismatch = false;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= n; ++m) {
      // dbar of (-1)^m U_{n+1,m}.
      QPoly flipped = oracle::monogenic(n, m, true, t);
      if (m % 2 != 0) flipped = -flipped;
      if (flipped != explicit_formula(n, m, true, t, true)) any_mismatch = true;
    }
  CHECK(any_mismatch);
}

TEST_CASE("monogenic index validation") {
  const SpheroidParam sp(q(1, 4));
  CHECK_THROWS_AS(monogenic({2, 4, Parity::Plus}, sp), IndexError);
  CHECK_THROWS_AS(monogenic({2, 0, Parity::Minus}, sp), IndexError);
  CHECK_NOTHROW(monogenic({2, 3, Parity::Minus}, sp));
  CHECK(monogenic_indices(0).size() == 3);
  CHECK(monogenic_indices(2).size() == 7);
  CHECK(contragenic_indices(3).size() == 5);
  CHECK(harmonic_indices(3).size() == 7);
}

TEST_CASE("psi relations with e3") {
  const SpheroidParam sp(q(9, 16));
  const QPoly e3 = QPoly::unit(3);
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= n; ++m)
      for (Parity p : {Parity::Plus, Parity::Minus}) {
        const int s = sign(p);
        CHECK(qmul(psi_combo(n, m, PsiFamily::Plus, p, sp), e3) ==
              Rational(s) * psi_combo(n, m, PsiFamily::Plus, flip(p), sp));
        CHECK(qmul(psi_combo(n, m, PsiFamily::Minus, p, sp), e3) ==
              Rational(-s) * psi_combo(n, m, PsiFamily::Minus, flip(p), sp));
      }
}

TEST_CASE("nu ratio") {
  for (const auto& t : kSweep) {
    const SpheroidParam sp(t);
    for (int n = 1; n <= 5; ++n) {
      CHECK(nu_ratio(n, 0, sp) == 1);
      for (int m = n; m <= n + 1; ++m) CHECK(nu_ratio(n, m, sp) == 0);
      for (int m = 1; m <= n - 1; ++m) {
        const Rational p2 = Rational((n + m + 1) * (n + m + 2));
        const Rational expected = radial_norm(n, m + 1, t) / (p2 * p2 * radial_norm(n, m - 1, t));
        CHECK(nu_ratio(n, m, sp) == expected);
        CHECK(garabedian_radial_norm(n, m, sp) == radial_norm(n, m, t));
      }
    }
  }
  // On the ball the radial-norm weight is twice the literal norm ratio here.
  CHECK(nu_ratio(2, 1, SpheroidParam::ball()) == q(1, 6));
  CHECK(garabedian_norm_ratio(2, 1, SpheroidParam::ball()) == q(1, 12));
}

TEST_CASE("contragenics") {
  for (const auto& t : kSweep) {
    const SpheroidParam sp(t);
    CHECK(contragenic({1, 0, Parity::Plus}, sp) == QPoly({}, Rational(-2) * x2, Rational(2) * x1));
    for (int n = 1; n <= 4; ++n) {
      const auto zs = contragenic_indices(n);
      CHECK(zs.size() == static_cast<std::size_t>(2 * n - 1));
      for (const auto& zi : zs) {
        const QPoly z = contragenic(zi, sp);
        CHECK(z.is_reduced());
        CHECK(!z.is_zero());
        CHECK(z == contragenic_from_psi(zi, sp));
        for (int i = 0; i < 3; ++i) {
          const QPoly di = QPoly::scalar(z[i]);
          CHECK(dirac(dirac(di, false), true).is_zero());
        }
        for (int j = 0; j <= n + 1; ++j)
          for (const auto& xi : monogenic_indices(j)) {
            const QPoly x = oracle::monogenic(j, xi.m, xi.parity == Parity::Plus, t);
            CHECK(iprod(z, x, t) == 0);
            CHECK(iprod(z, conjugate(x), t) == 0);
          }
      }
    }
  }
  CHECK_THROWS_AS(contragenic({2, 2, Parity::Plus}, SpheroidParam::ball()), IndexError);
  CHECK_THROWS_AS(contragenic({0, 0, Parity::Plus}, SpheroidParam::ball()), IndexError);
}

TEST_CASE("contragenics are mutually orthogonal") {
  const Rational t = q(9, 16);
  const SpheroidParam sp(t);
  std::vector<QPoly> zs;
  for (int n = 1; n <= 4; ++n)
    for (const auto& zi : contragenic_indices(n)) zs.push_back(contragenic(zi, sp));
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = 0; j < zs.size(); ++j) {
      const Rational v = iprod(zs[i], zs[j], t);
      if (i == j)
        CHECK(v > 0);
      else
        CHECK(v == 0);
    }
}

TEST_CASE("V-Z-A splits") {
  struct Case {
    HarmonicIndex idx;
    Rational t;
  };
  const std::vector<Case> cases{{{2, 1, Parity::Plus}, 0}, {{4, 2, Parity::Minus}, -1}, {{3, 1, Parity::Plus}, q(1, 4)}};
  for (const auto& c : cases) {
    const SpheroidParam sp(c.t);
    const auto& [n, m, p] = c.idx;
    for (SplitSide side : {SplitSide::Lower, SplitSide::Upper}) {
      const VzaSplit split = vza_split(c.idx, sp, side);
      CHECK(split.reconstruct() == split.target);
      const QPoly expected_target = side == SplitSide::Lower ? psi_combo(n, m - 1, PsiFamily::Minus, p, sp)
                                                             : psi_combo(n, m + 1, PsiFamily::Plus, p, sp);
      CHECK(split.target == expected_target);
      CHECK(split.contragenic_part == contragenic({n, m, flip(p)}, sp));
    }
  }
}

TEST_CASE("degenerate split at m = n is a pure contragenic multiple") {
  for (const auto& t : kSweep) {
    const SpheroidParam sp(t);
    for (int n = 1; n <= 4; ++n)
      for (Parity p : {Parity::Plus, Parity::Minus}) {
        const VzaSplit split = vza_split({n, n, p}, sp, SplitSide::Upper);
        CHECK(split.ambigenic_part.is_zero());
        CHECK(split.reconstruct() == split.target);
        CHECK(split.scale == Rational(2 * n + 2));
      }
  }
}

TEST_CASE("contragenic decomposition between spheroids") {
  const std::vector<std::pair<Rational, Rational>> pairs{{q(1, 4), q(9, 16)}, {-1, q(1, 4)}, {q(9, 16), -3}};
  for (const auto& [tt, ts] : pairs) {
    const SpheroidParam target(tt), source(ts);
    for (int n = 1; n <= 4; ++n)
      for (const auto& zi : contragenic_indices(n)) {
        const auto terms = contragenic_decomposition(zi, tt, ts);
        CHECK(assemble_decomposition(terms, source) == contragenic(zi, target));
      }
  }
  const ZCoefficients same = coef_z_decomp(4, 1, 0, q(1, 4), q(1, 4));
  CHECK(same.contragenic == 1);
  CHECK(same.ambigenic == 0);
  for (int k = 0; 2 * k <= 3; ++k) {
    const ZCoefficients z0 = coef_z_decomp(4, 0, k, q(1, 4), q(9, 16));
    CHECK(z0.contragenic == q(4 - 2 * k + 2, 6) * coef_w(4, 1, k, q(1, 4), q(9, 16)));
    CHECK(z0.ambigenic == 0);
  }
}

TEST_CASE("intersection with the ball kernel") {
  CHECK_THROWS_AS(intersection_report(2, SpheroidParam::ball()), UnsupportedRegime);
  const IntersectionReport r1 = intersection_report(1, SpheroidParam(q(1, 4)));
  CHECK(r1.part_i_holds);
  CHECK(r1.part_ii.empty());
  for (const auto& t : {q(1, 4), Rational(-3)}) {
    const IntersectionReport r = intersection_report(3, SpheroidParam(t));
    CHECK(r.part_i_holds);
    CHECK(r.part_i_checks > 0);
    CHECK(r.part_ii_holds);
    REQUIRE(r.part_ii.size() == 4);
    for (const auto& w : r.part_ii) {
      REQUIRE(w.ambigenic_index.has_value());
      CHECK(!w.value.is_zero());
      const QPoly z = contragenic(w.contragenic_index, SpheroidParam(t));
      const HarmonicIndex& a = *w.ambigenic_index;
      const QPoly amb = oracle::monogenic(a.n, a.m, a.parity == Parity::Plus, 0);
      CHECK(w.value.coeff == iprod(z, amb - conjugate(amb), 0));
    }
    // Independent check of part (i) against oracle ball monogenics.
    const QPoly z30 = contragenic({3, 0, Parity::Plus}, SpheroidParam(t));
    for (int j = 0; j <= 3; ++j)
      for (const auto& xi : monogenic_indices(j)) {
        const QPoly x = oracle::monogenic(j, xi.m, xi.parity == Parity::Plus, 0);
        CHECK(iprod(z30, x, 0) == 0);
        CHECK(iprod(z30, conjugate(x), 0) == 0);
      }
  }
}
