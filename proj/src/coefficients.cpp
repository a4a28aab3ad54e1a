#include "spheroidal/coefficients.hpp"

namespace sph {

namespace {

Rational half_poch(int n) { return pochhammer(kOneHalf, static_cast<unsigned>(n)); }

Rational fact(int n) { return factorial_q(n); }

Rational pow4(int e) {
  Rational r(1);
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), 2U * static_cast<unsigned>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), 2U * static_cast<unsigned>(-e));
  return r;
}

}  // namespace

Rational coef_u_to_u(int n, int m, int k) {
  if (n < 0 || m < 0 || m > n || k < 0 || 2 * k > n) return 0;
  Rational num = half_poch(n - k) * pochhammer(Rational(n + m - 2 * k + 1), static_cast<unsigned>(2 * k));
  Rational den = pow4(k) * half_poch(n) * fact(k);
  if (k % 2 != 0) den = -den;
  return num / den;
}

Rational coef_v_to_v(int n, int m, int k) { return coef_u_to_u(n + 1, m, k); }

Rational coef_vhat_to_u0(int n, int m, int k) { return Rational(n + m - 2 * k + 1) * coef_v_to_v(n, m, k); }

Rational coef_u0_to_umu(int n, int m, int k) {
  if (n < 0 || m < 0 || m > n || k < 0 || 2 * k > n - m) return 0;
  Rational num = pow4(n - 2 * k) * Rational(2 * n - 4 * k + 1) * fact(n - k) * fact(m + n) * half_poch(n - 2 * k);
  Rational den = fact(k) * fact(2 * n - 2 * k + 1) * fact(n + m - 2 * k);
  return num / den;
}

Rational coef_u0_to_vmu(int n, int m, int k) {
  if (m > n || 2 * k > n - m) return 0;
  return coef_u0_to_umu(n + 1, m, k) / Rational(n + m + 1);
}

Rational coef_vmu_from_umu(int n, int m, int k) {
  if (n < 0 || m < 0 || m > n || k < 0 || 2 * k > n - m) return 0;
  return fact(n + m + 1) * half_poch(n - 2 * k + 1) / (pow4(k) * fact(n + m - 2 * k) * half_poch(n + 1));
}

Rational coef_umu_from_vmu(int n, int m, int k) {
  if (n < 0 || m < 0 || m > n) return 0;
  if (k == 0) return Rational(1) / Rational(n + m + 1);
  if (k == 1 && m <= n - 2) return -Rational(n + m) / Rational(4 * n * n - 1);
  return 0;
}

Rational coef_v0_from_vmu(int n, int m, int k) {
  return coef_u0_to_umu(n + 1, m, k);
}

Rational hypergeom_terminating(int k, int n, const Rational& z) {
  if (k < 0) return 0;
  const HalfInteger b = HalfInteger::from_twice(Integer(-2 * n + 2 * k - 3));
  const HalfInteger c = HalfInteger::from_twice(Integer(-2 * n - 1));
  Rational sum(0);
  Rational zl(1);
  for (int l = 0; l <= k; ++l) {
    const auto ul = static_cast<unsigned>(l);
    sum += pochhammer(Rational(-k), ul) * pochhammer(b, ul) / (fact(l) * pochhammer(c, ul)) * zl;
    zl *= z;
  }
  return sum;
}

Rational coef_w_gamma(int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0 || 2 * k > n - m + 2) return 0;
  return fact(n + m + 1) * half_poch(n - 2 * k + 2) /
         (pow4(k) * fact(k) * fact(n + m - 2 * k + 1) * half_poch(n - k + 2));
}

Rational coef_w(int n, int m, int k, const Rational& t_target, const Rational& t_source) {
  if (n < 0 || m < 0 || m > n + 1 || k < 0 || 2 * k > n - m + 1) return 0;
  if (t_source == 0) return coef_v_to_v(n, m, k) * pow(t_target, static_cast<unsigned>(k));
  const Rational ratio = t_target / t_source;
  return hypergeom_terminating(k, n, ratio) * coef_w_gamma(n, m, k) * pow(t_source, static_cast<unsigned>(k));
}

Rational coef_u_mu_to_u_mu(int n, int m, int k, const Rational& t_target, const Rational& t_source) {
  if (n < 0 || m < 0 || m > n || k < 0 || 2 * k > n - m) return 0;
  // Through the ball: U[a] = sum_l c_{n,l} a^l U_{n-2l}[0], then expand each
  // U_{n-2l}[0] in U[b].
  Rational sum(0);
  for (int l = 0; l <= k; ++l) {
    sum += coef_u_to_u(n, m, l) * pow(t_target, static_cast<unsigned>(l)) * coef_u0_to_umu(n - 2 * l, m, k - l) *
           pow(t_source, static_cast<unsigned>(k - l));
  }
  return sum;
}

}  // namespace sph
