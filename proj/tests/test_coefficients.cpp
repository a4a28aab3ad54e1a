#include "oracles.hpp"

#include "spheroidal/coefficients.hpp"

#include <doctest.h>

using namespace sph;
using oracle::expand_in_basis;

namespace {

const std::vector<Rational> kNonzero{make_rational(1, 4), make_rational(9, 16), -1, -3};

Rational q(long p, long d = 1) { return make_rational(p, d); }

/// Coefficients of target over {family(n - 2k) : k}, divided by t^k.
template <typename Family>
std::vector<Rational> expand_levels(const TriPoly& target, int n, int m, const Rational& t, Family family,
                                    int top_k) {
  std::vector<TriPoly> basis;
  std::vector<int> ks;
  for (int k = 0; k <= top_k && n - 2 * k >= m; ++k) {
    basis.push_back(family(n - 2 * k));
    ks.push_back(k);
  }
  const auto coeffs = expand_in_basis(target, basis);
  REQUIRE(coeffs.has_value());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < ks.size(); ++i) out.push_back((*coeffs)[i] / pow(t, static_cast<unsigned>(ks[i])));
  return out;
}

}  // namespace

TEST_CASE("U-to-U coefficients") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) CHECK(coef_u_to_u(n, m, 0) == 1);
  CHECK(coef_u_to_u(2, 0, 1) == q(-1, 3));
  CHECK(coef_u_to_u(3, 4, 0) == 0);
  CHECK(coef_u_to_u(3, 1, 2) == 0);
  CHECK(coef_u_to_u(3, 1, -1) == 0);
}

TEST_CASE("V-to-V coefficients shift the degree") {
  CHECK(coef_v_to_v(4, 2, 0) == 1);
  CHECK(coef_v_to_v(1, 0, 1) == coef_u_to_u(2, 0, 1));
  CHECK(coef_v_to_v(1, 0, 1) == q(-1, 3));
  CHECK(coef_v_to_v(3, 1, 3) == 0);
}

TEST_CASE("V-from-spherical-U coefficients") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) CHECK(coef_vhat_to_u0(n, m, 0) == n + m + 1);
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m)
      for (int k = 0; 2 * k <= n - m; ++k) CHECK(coef_vhat_to_u0(n, m, k) == (n + m - 2 * k + 1) * coef_v_to_v(n, m, k));
  CHECK(coef_vhat_to_u0(2, 0, 5) == 0);
}

TEST_CASE("spherical-from-spheroidal coefficients") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) CHECK(coef_u0_to_umu(n, m, 0) == 1);
  CHECK(coef_u0_to_umu(2, 0, 1) == q(1, 3));
  for (int n = 1; n <= 5; ++n) CHECK(coef_u0_to_umu(n, n, 1) == 0);
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) CHECK(coef_u0_to_vmu(n, m, 0) == q(1, n + m + 1));
  CHECK(coef_u0_to_vmu(1, 0, 0) == q(1, 2));
  CHECK(coef_u0_to_vmu(1, 0, 1) == 0);
  CHECK(coef_u0_to_vmu(1, 2, 0) == 0);
}

TEST_CASE("V-from-U coefficients on one spheroid") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) CHECK(coef_vmu_from_umu(n, m, 0) == n + m + 1);
  CHECK(coef_vmu_from_umu(2, 0, 1) == q(2, 5));
  CHECK(coef_umu_from_vmu(3, 1, 0) == q(1, 5));
  CHECK(coef_umu_from_vmu(3, 1, 1) == q(-4, 35));
  CHECK(coef_umu_from_vmu(3, 1, 2) == 0);
  CHECK(coef_umu_from_vmu(1, 1, 1) == 0);
}

TEST_CASE("V-at-ball from V-on-spheroid coefficients") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= n + 1; ++m) CHECK(coef_v0_from_vmu(n, m, 0) == 1);
  CHECK(coef_v0_from_vmu(3, 1, 5) == 0);
  for (const auto& t : {make_rational(1, 4), make_rational(9, 16)})
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m)
        for (int k = 0; 2 * k <= n - m + 1; ++k)
          CHECK(coef_v0_from_vmu(n, m, k) == coef_w(n, m, k, 0, t) / pow(t, static_cast<unsigned>(k)));
}

TEST_CASE("terminating hypergeometric sum") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(hypergeom_terminating(0, n, q(7, 3)) == 1);
    for (int k = 0; k <= 3; ++k) CHECK(hypergeom_terminating(k, n, 0) == 1);
  }
  // k=1, n=2: 1 + (-1)(-5/2)/(-5/2) z = 1 - z.
  CHECK(hypergeom_terminating(1, 2, 1) == 0);
  CHECK(hypergeom_terminating(1, 2, q(1, 3)) == q(2, 3));
  // k=2, n=4: a=-2, b=-7/2, c=-9/2.
  const Rational z = q(2, 5);
  const Rational direct = 1 + q(-2) * q(-7, 2) / q(-9, 2) * z +
                          q(-2) * q(-1) * q(-7, 2) * q(-5, 2) / (q(2) * q(-9, 2) * q(-7, 2)) * z * z;
  CHECK(hypergeom_terminating(2, 4, z) == direct);
}

TEST_CASE("closed-form w agrees with the double sum") {
  for (const auto& tt : kNonzero)
    for (const auto& ts : kNonzero)
      for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= n; ++m)
          for (int k = 0; 2 * k <= n - m; ++k) CHECK(coef_w(n, m, k, tt, ts) == oracle::w_double_sum(n, m, k, tt, ts));
}

TEST_CASE("w special cases") {
  for (const auto& t : kNonzero)
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m) {
        CHECK(coef_w(n, m, 0, t, q(1, 4)) == 1);
        for (int k = 1; 2 * k <= n - m + 1; ++k) {
          CHECK(coef_w(n, m, k, t, t) == 0);
          CHECK(coef_w(n, m, k, t, 0) == coef_v_to_v(n, m, k) * pow(t, static_cast<unsigned>(k)));
        }
      }
  CHECK(coef_w(3, 5, 0, q(1, 4), q(1, 2)) == 0);
}

TEST_CASE("coefficient families reproduce exact expansions of oracle polynomials") {
  for (const auto& t : {make_rational(1, 4), Rational(-3)}) {
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m) {
        auto u0 = [&](int j) { return oracle::spheroidal_harmonic(j, m, true, 0); };
        auto ut = [&](int j) { return oracle::spheroidal_harmonic(j, m, true, t); };
        auto v0 = [&](int j) { return oracle::garabedian_harmonic(j, m, true, 0); };
        auto vt = [&](int j) { return oracle::garabedian_harmonic(j, m, true, t); };
        const int top = n;
        const auto c = expand_levels(ut(n), n, m, t, u0, top);
        const auto c0 = expand_levels(u0(n), n, m, t, ut, top);
        const auto chat = expand_levels(vt(n), n, m, t, v0, top);
        const auto ccheck = expand_levels(vt(n), n, m, t, u0, top);
        const auto d = expand_levels(vt(n), n, m, t, ut, top);
        const auto uv = expand_levels(u0(n), n, m, t, vt, top);
        const auto v0v = expand_levels(v0(n), n, m, t, vt, top);
        for (std::size_t k = 0; k < c.size(); ++k) {
          const int kk = static_cast<int>(k);
          CHECK(coef_u_to_u(n, m, kk) == c[k]);
          CHECK(coef_u0_to_umu(n, m, kk) == c0[k]);
          CHECK(coef_v_to_v(n, m, kk) == chat[k]);
          CHECK(coef_vhat_to_u0(n, m, kk) == ccheck[k]);
          CHECK(coef_vmu_from_umu(n, m, kk) == d[k]);
          CHECK(coef_u0_to_vmu(n, m, kk) == uv[k]);
          CHECK(coef_v0_from_vmu(n, m, kk) == v0v[k]);
        }
        // Two-term inverse.
        if (n >= 2 && m <= n - 2) {
          const auto inv = expand_in_basis(ut(n), {vt(n), vt(n - 2)});
          REQUIRE(inv.has_value());
          CHECK(coef_umu_from_vmu(n, m, 0) == (*inv)[0]);
          CHECK(coef_umu_from_vmu(n, m, 1) == (*inv)[1] / t);
        }
      }
  }
}

TEST_CASE("w reproduces exact expansions between two spheroids") {
  const std::vector<std::pair<Rational, Rational>> pairs{
      {q(1, 4), q(9, 16)}, {-1, q(1, 4)}, {q(-3), -1}, {0, q(1, 4)}, {q(1, 4), 0}};
  for (const auto& [tt, ts] : pairs)
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m) {
        std::vector<TriPoly> basis;
        for (int k = 0; n - 2 * k >= m; ++k) basis.push_back(oracle::garabedian_harmonic(n - 2 * k, m, true, ts));
        const auto w = expand_in_basis(oracle::garabedian_harmonic(n, m, true, tt), basis);
        REQUIRE(w.has_value());
        for (std::size_t k = 0; k < w->size(); ++k) CHECK(coef_w(n, m, static_cast<int>(k), tt, ts) == (*w)[k]);
      }
}

TEST_CASE("mixed U-to-U coefficient between spheroids") {
  const Rational tt = q(9, 16), ts = -1;
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) {
      std::vector<TriPoly> basis;
      for (int k = 0; n - 2 * k >= m; ++k) basis.push_back(oracle::spheroidal_harmonic(n - 2 * k, m, true, ts));
      const auto c = expand_in_basis(oracle::spheroidal_harmonic(n, m, true, tt), basis);
      REQUIRE(c.has_value());
      for (std::size_t k = 0; k < c->size(); ++k) CHECK(coef_u_mu_to_u_mu(n, m, static_cast<int>(k), tt, ts) == (*c)[k]);
    }
}
