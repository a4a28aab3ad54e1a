#pragma once

#include "spheroidal/harmonics.hpp"
#include "spheroidal/integrals.hpp"
#include "spheroidal/quat.hpp"

#include <optional>
#include <vector>

namespace sph {

// Monogenic indices (n, m, parity) allow 0 <= m <= n + 1.

/// X_{n,m}[t] = dbar U_{n+1,m}[t]. Satisfies dirac(X, false) = 0.
QPoly monogenic(const HarmonicIndex& idx, const SpheroidParam& sp);

/// The same polynomial assembled from Garabedian harmonics:
///   m = 0:  V_{n,0} - (V_{n,1}^+ e1 + V_{n,1}^- e2)/(n+2)
///   m >= 1: V_{n,m}^{+-} + [(n+m+1) V_{n,m-1}^{+-} - V_{n,m+1}^{+-}/(n+m+2)] e1/2
///           -+ [(n+m+1) V_{n,m-1}^{-+} + V_{n,m+1}^{-+}/(n+m+2)] e2/2
QPoly monogenic_from_garabedian(const HarmonicIndex& idx, const SpheroidParam& sp);

/// Quaternionic conjugate of the monogenic; annihilated by dbar.
QPoly antimonogenic(const HarmonicIndex& idx, const SpheroidParam& sp);

/// A_{n,m}[t] = X - conj(X) = 2 Vec X.
QPoly ambigenic(const HarmonicIndex& idx, const SpheroidParam& sp);

/// Which angular pairing Psi_{+,m} or Psi_{-,m}.
enum class PsiFamily { Plus, Minus };

/// Vhat_{n,m} Psi_{family,m}^{parity} = V^{p} e1 + s p V^{-p} e2 with
/// s = +1 for PsiFamily::Plus and -1 for PsiFamily::Minus; V^-_{n,0} = 0.
QPoly psi_combo(int n, int m, PsiFamily family, Parity parity, const SpheroidParam& sp);

/// A_{n,m} rebuilt as a combination of psi_combo terms.
QPoly ambigenic_from_psi(const HarmonicIndex& idx, const SpheroidParam& sp);

/// ||V_{n,m}^+||^2 / (1 + delta_{0,m}): the norm of the phi-free factor,
/// in units of pi.
Rational garabedian_radial_norm(int n, int m, const SpheroidParam& sp);

/// Literal squared ratio (||V_{n,m+1}^+|| / ((n+m+1)_2 ||V_{n,m-1}^+||))^2.
Rational garabedian_norm_ratio(int n, int m, const SpheroidParam& sp);

/// nu_{n,m}[t]: 1 for m = 0, 0 for m >= n, and otherwise the squared ratio
/// of radial norms  R_{n,m+1} / ((n+m+1)_2^2 R_{n,m-1}). This is the weight
/// that makes the contragenics below orthogonal to A_{n,m}. Memoized.
Rational nu_ratio(int n, int m, const SpheroidParam& sp);

/// Z_{n,0}[t] = -A_{n,0} e3, and for 1 <= m <= n-1
///   Z_{n,m}^{+-} = ((nu-1) A_{n,m}^{-+} -+ (nu+1) A_{n,m}^{+-} e3) / 2.
/// Always R^3-valued. Throws IndexError outside n >= 1, 0 <= m <= n-1.
QPoly contragenic(const HarmonicIndex& idx, const SpheroidParam& sp);

/// The same family from Garabedian pieces:
///   Z_{n,0} = 2/(n+2) Vhat_{n,1} Psi_{+,1}^-,
///   Z_{n,m}^{+-} = (n+m+1) nu Vhat_{n,m-1} Psi_{-,m-1}^{-+} + Vhat_{n,m+1} Psi_{+,m+1}^{-+}/(n+m+2).
/// Also defined (and zero) for m = n, n+1, which vza_split uses.
QPoly contragenic_from_psi(const HarmonicIndex& idx, const SpheroidParam& sp);

enum class SplitSide { Lower, Upper };

/// Contragenic + ambigenic decomposition of a psi_combo:
///   Lower: Vhat_{n,m-1} Psi_{-,m-1}^{p} = scale * (Z_{n,m}^{-p} + A_{n,m}^{p}),
///          scale = 1/((n+m+1)(nu+1));
///   Upper: Vhat_{n,m+1} Psi_{+,m+1}^{p} = scale * (Z_{n,m}^{-p} - nu A_{n,m}^{p}),
///          scale = (n+m+2)/(nu+1).
struct VzaSplit {
  QPoly target;           ///< the psi_combo being decomposed
  Rational scale;
  QPoly contragenic_part; ///< Z_{n,m}^{-p}
  QPoly ambigenic_part;   ///< A_{n,m}^{p} or -nu A_{n,m}^{p}
  QPoly reconstruct() const { return scale * (contragenic_part + ambigenic_part); }
};

/// For n >= 1 and 1 <= m <= n+1.
VzaSplit vza_split(const HarmonicIndex& idx, const SpheroidParam& sp, SplitSide side);

struct ZCoefficients {
  Rational contragenic;  ///< zC
  Rational ambigenic;    ///< zA (always 0 for m = 0)
};

/// Coefficients of
///   Z_{n,m}^{+-}[t_target] = sum_k zC Z_{n-2k,m}^{+-}[t_source] + zA A_{n-2k,m}^{-+}[t_source].
/// m = 0: zC = (n-2k+2)/(n+2) w_{n,1,k}, 0 <= 2k <= n-1.
/// 1 <= m <= n-1, with nu = nu_{n,m}[t_target], nu' = nu_{n-2k,m}[t_source]:
///   2k <= n-m-1:       zC = (nu+1)/(nu'+1) w,  zA = (nu-nu')/(nu'+1) w
///   n-m <= 2k <= n-m+1: zC = nu/(nu'+1) w,      zA = nu/(nu'+1) w
/// (in the upper range Z_{n-2k,m}[t_source] is zero).
ZCoefficients coef_z_decomp(int n, int m, int k, const Rational& t_target, const Rational& t_source);

struct ZDecompositionTerm {
  int k = 0;
  HarmonicIndex contragenic_index;
  HarmonicIndex ambigenic_index;
  ZCoefficients coeffs;
};

std::vector<ZDecompositionTerm> contragenic_decomposition(const HarmonicIndex& idx, const Rational& t_target,
                                                          const Rational& t_source);

/// Sum of the decomposition terms, evaluated on the source spheroid.
QPoly assemble_decomposition(const std::vector<ZDecompositionTerm>& terms, const SpheroidParam& source);

struct IntersectionWitness {
  HarmonicIndex contragenic_index;      ///< Z_{n,m}^{+-}[t]
  std::optional<HarmonicIndex> ambigenic_index;  ///< ball ambigenic A[0] with nonzero product
  PiRational value;
};

struct IntersectionReport {
  int n = 0;
  Rational t;
  /// Number of ball monogenics/antimonogenics of degree <= n tested against Z_{n,0}[t].
  std::size_t part_i_checks = 0;
  bool part_i_holds = true;
  std::optional<HarmonicIndex> part_i_counterexample;
  std::vector<IntersectionWitness> part_ii;  ///< one entry per (m, parity), 1 <= m <= n-1
  bool part_ii_holds = true;
};

/// Tests Z_{n,0}[t] against every ball monogenic and antimonogenic of degree
/// <= n, and searches ball ambigenics A_{j,m'}[0], j <= n, for a nonzero
/// product with each Z_{n,m}[t], 1 <= m <= n-1. Requires t != 0.
IntersectionReport intersection_report(int n, const SpheroidParam& sp);

/// All monogenic indices of degree n: (n,0,+) then (n,m,+-), 1 <= m <= n+1.
std::vector<HarmonicIndex> monogenic_indices(int n);

/// All contragenic indices of degree n: (n,0,+) then (n,m,+-), 1 <= m <= n-1.
std::vector<HarmonicIndex> contragenic_indices(int n);

/// All harmonic indices of degree n: (n,0,+) then (n,m,+-), 1 <= m <= n.
std::vector<HarmonicIndex> harmonic_indices(int n);

}  // namespace sph
