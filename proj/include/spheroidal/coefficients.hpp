#pragma once

// Coefficient families relating spherical, spheroidal and Garabedian
// harmonics. Every function returns 0 outside its index range.

#include "spheroidal/exact.hpp"

namespace sph {

/// U_{n,m}[t] = sum_k c_{n,m,k} t^k U_{n-2k,m}[0]   (0 <= m <= n, 0 <= 2k <= n).
Rational coef_u_to_u(int n, int m, int k);

/// V_{n,m}[t] = sum_k chat_{n,m,k} t^k V_{n-2k,m}[0], chat_{n,m,k} = c_{n+1,m,k}.
Rational coef_v_to_v(int n, int m, int k);

/// V_{n,m}[t] = sum_k ccheck_{n,m,k} t^k U_{n-2k,m}[0].
Rational coef_vhat_to_u0(int n, int m, int k);

/// U_{n,m}[0] = sum_{0<=2k<=n-m} c0_{n,m,k} t^k U_{n-2k,m}[t].
Rational coef_u0_to_umu(int n, int m, int k);

/// U_{n,m}[0] = sum_{0<=2k<=n-m} c0_{n+1,m,k}/(n+m+1) t^k V_{n-2k,m}[t].
Rational coef_u0_to_vmu(int n, int m, int k);

/// V_{n,m}[t] = sum_{0<=2k<=n-m} d_{n,m,k} t^k U_{n-2k,m}[t]
/// with d = (n+m+1)! (1/2)_{n-2k+1} / (4^k (n+m-2k)! (1/2)_{n+1}).
Rational coef_vmu_from_umu(int n, int m, int k);

/// Two-term inverse of coef_vmu_from_umu:
/// U_{n,m}[t] = V_{n,m}[t]/(n+m+1) - (n+m)/(4n^2-1) t V_{n-2,m}[t].
/// k = 0 gives the first coefficient, k = 1 the coefficient of t V_{n-2,m}.
Rational coef_umu_from_vmu(int n, int m, int k);

/// V_{n,m}[0] = sum_k c0_{n+1,m,k} t^k V_{n-2k,m}[t].
Rational coef_v0_from_vmu(int n, int m, int k);

/// Terminating 2F1(-k, -n+k-3/2; -n-1/2; z), evaluated exactly.
Rational hypergeom_terminating(int k, int n, const Rational& z);

/// gamma_{n,m,k} = (n+m+1)! (1/2)_{n-2k+2} / (4^k k! (n+m-2k+1)! (1/2)_{n-k+2})
/// for 0 <= 2k <= n-m+2.
Rational coef_w_gamma(int n, int m, int k);

/// w_{n,m,k}[t_target, t_source]:
///   V_{n,m}[t_target] = sum_k w_{n,m,k} V_{n-2k,m}[t_source].
/// Closed hypergeometric form for t_source != 0; the t_source -> 0 limit
/// chat_{n,m,k} t_target^k otherwise. Nonzero only for 0 <= 2k <= n-m+1,
/// 0 <= m <= n+1 (the top k is used by the monogenic conversion).
Rational coef_w(int n, int m, int k, const Rational& t_target, const Rational& t_source);

/// Coefficient of U_{n-2k,m}[t_source] in U_{n,m}[t_target].
Rational coef_u_mu_to_u_mu(int n, int m, int k, const Rational& t_target, const Rational& t_source);

}  // namespace sph
