#include "spheroidal/verify.hpp"

#include "spheroidal/basis.hpp"
#include "spheroidal/coefficients.hpp"
#include "spheroidal/convert.hpp"
#include "spheroidal/errors.hpp"
#include "spheroidal/integrals.hpp"
#include "spheroidal/monogenic.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sph {

void CheckOutcome::record(bool ok, const std::string& where) {
  ++cases;
  if (!ok && !counterexample) counterexample = where;
}

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

Json SuiteReport::to_json() const {
  Json out{{"suite", suite}, {"passed", passed()}, {"checks", Json::array()}};
  for (const auto& c : checks) {
    Json entry{{"identity", c.identity}, {"cases", c.cases}, {"passed", c.passed()}};
    entry["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
    out["checks"].push_back(std::move(entry));
  }
  if (!details.empty()) out["details"] = details;
  return out;
}

namespace {

constexpr int kAllParities = 2;

std::vector<Rational> sweep(const VerifyConfig& config) {
  if (!config.t_values.empty()) return config.t_values;
  return {Rational(0), make_rational(1, 4), make_rational(9, 16), Rational(-1), Rational(-3)};
}

int degree_or(const VerifyConfig& config, int fallback) { return config.max_degree.value_or(fallback); }

std::string where(const HarmonicIndex& idx, const Rational& t) { return to_string(idx) + " t=" + to_string(t); }

std::string where(const HarmonicIndex& idx, const Rational& tt, const Rational& ts) {
  return to_string(idx) + " t_target=" + to_string(tt) + " t_source=" + to_string(ts);
}

std::string where_nmk(int n, int m, int k) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

Json t_list_json(const std::vector<Rational>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(to_string(t));
  return out;
}

/// Ordered pairs of distinct parameters.
std::vector<std::pair<Rational, Rational>> distinct_pairs(const std::vector<Rational>& ts) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& a : ts)
    for (const auto& b : ts)
      if (a != b) out.emplace_back(a, b);
  return out;
}

TriPoly u_or_zero(int n, int m, Parity p, const SpheroidParam& sp) {
  if (n < 0 || m > n) return {};
  return spheroidal_solid_harmonic({n, m, p}, sp);
}

// --- suites -----------------------------------------------------------------

SuiteReport suite_bbs(const VerifyConfig& config) {
  const int max_n = degree_or(config, 8);
  const auto ts = sweep(config);
  SuiteReport report{"bbs",
                     {{"U[t] = sum_k c t^k U[0]"},
                      {"V[t] = sum_k chat t^k V[0]"},
                      {"U[t] matches its harmonic extension from the axis"}},
                     {}};
  const SpheroidParam ball = SpheroidParam::ball();
  for (const auto& t : ts) {
    const SpheroidParam sp(t);
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& idx : harmonic_indices(n)) {
        TriPoly u_rhs;
        TriPoly v_rhs;
        for (int k = 0; 2 * k <= n; ++k) {
          const Rational tk = pow(t, k);
          u_rhs += coef_u_to_u(n, idx.m, k) * tk * u_or_zero(n - 2 * k, idx.m, idx.parity, ball);
          v_rhs += coef_v_to_v(n, idx.m, k) * tk * garabedian_or_zero(n - 2 * k, idx.m, idx.parity, ball);
        }
        report.checks[0].record(spheroidal_solid_harmonic(idx, sp) == u_rhs, where(idx, t));
        report.checks[1].record(garabedian_harmonic(idx, sp) == v_rhs, where(idx, t));
        report.checks[2].record(spheroidal_harmonic_by_extension(idx, sp) == u_rhs, where(idx, t));
      }
    }
  }
  report.details = Json{{"max_degree", max_n}, {"t", t_list_json(ts)}};
  return report;
}

SuiteReport suite_roundtrip(const VerifyConfig& config) {
  const int max_n = degree_or(config, 8);
  const auto ts = sweep(config);
  SuiteReport report{"roundtrip",
                     {{"U[0] = sum_k c0 t^k U[t]"},
                      {"c then c0 composes to the identity"},
                      {"c0 then c composes to the identity"},
                      {"V[t] = sum_k d t^k U[t]"},
                      {"U[t] = V[t]/(n+m+1) - (n+m)/(4n^2-1) t V_{n-2}[t]"},
                      {"inverse after forward composes to the identity"},
                      {"U[0] = sum_k c0_{n+1}/(n+m+1) t^k V[t]"}},
                     {}};
  const SpheroidParam ball = SpheroidParam::ball();
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; 2 * k <= n - m; ++k) {
        Rational forward = 0;
        Rational backward = 0;
        Rational inverse = 0;
        for (int j = 0; j <= k; ++j) {
          forward += coef_u_to_u(n, m, j) * coef_u0_to_umu(n - 2 * j, m, k - j);
          backward += coef_u0_to_umu(n, m, j) * coef_u_to_u(n - 2 * j, m, k - j);
        }
        inverse = coef_umu_from_vmu(n, m, 0) * coef_vmu_from_umu(n, m, k);
        if (k >= 1) inverse += coef_umu_from_vmu(n, m, 1) * coef_vmu_from_umu(n - 2, m, k - 1);
        const Rational expected = k == 0 ? 1 : 0;
        report.checks[1].record(forward == expected, where_nmk(n, m, k));
        report.checks[2].record(backward == expected, where_nmk(n, m, k));
        report.checks[5].record(inverse == expected, where_nmk(n, m, k));
      }
    }
  }
  for (const auto& t : ts) {
    const SpheroidParam sp(t);
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& idx : harmonic_indices(n)) {
        const int m = idx.m;
        const Parity p = idx.parity;
        TriPoly u0_rhs;
        TriPoly v_rhs;
        TriPoly u0_from_v;
        for (int k = 0; 2 * k <= n - m; ++k) {
          const Rational tk = pow(t, k);
          u0_rhs += coef_u0_to_umu(n, m, k) * tk * u_or_zero(n - 2 * k, m, p, sp);
          v_rhs += coef_vmu_from_umu(n, m, k) * tk * u_or_zero(n - 2 * k, m, p, sp);
          u0_from_v += coef_u0_to_vmu(n, m, k) * tk * garabedian_or_zero(n - 2 * k, m, p, sp);
        }
        const TriPoly inverse = coef_umu_from_vmu(n, m, 0) * garabedian_harmonic(idx, sp) +
                                coef_umu_from_vmu(n, m, 1) * t * garabedian_or_zero(n - 2, m, p, sp);
        report.checks[0].record(spheroidal_solid_harmonic(idx, ball) == u0_rhs, where(idx, t));
        report.checks[3].record(garabedian_harmonic(idx, sp) == v_rhs, where(idx, t));
        report.checks[4].record(spheroidal_solid_harmonic(idx, sp) == inverse, where(idx, t));
        report.checks[6].record(spheroidal_solid_harmonic(idx, ball) == u0_from_v, where(idx, t));
      }
    }
  }
  report.details = Json{{"max_degree", max_n}, {"t", t_list_json(ts)}};
  return report;
}

/// Value at t_source = 0 of the polynomial t_source^k 2F1(...; t_target/t_source) gamma.
Rational w_limit_at_zero_source(int n, int m, int k, const Rational& tt) {
  const HalfInteger b = HalfInteger::from_twice(-2 * n + 2 * k - 3);
  const HalfInteger c = HalfInteger::from_twice(-2 * n - 1);
  const Rational top = pochhammer(Rational(-k), k) * pochhammer(b, k) /
                       (Rational(factorial(k)) * pochhammer(c, k));
  return top * pow(tt, k) * coef_w_gamma(n, m, k);
}

SuiteReport suite_cvv(const VerifyConfig& config) {
  const int max_n = degree_or(config, 8);
  const auto ts = sweep(config);
  SuiteReport report{"cvv",
                     {{"closed-form w equals the double sum"},
                      {"V[t_target] = sum_k w V[t_source]"},
                      {"w at t_source = 0 equals chat t_target^k"},
                      {"t_source -> 0 limit of the closed form equals chat t_target^k"},
                      {"w at t_target = 0 equals c0_{n+1} t_source^k"},
                      {"ladder (n+m+1)/(n+m-2k+1) w_{n,m-1,k} = w_{n,m,k}"},
                      {"ladder w_{n,m,k} = (n+m-2k+2)/(n+m+2) w_{n,m+1,k}"}},
                     {}};
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const auto& a : ts)
    for (const auto& b : ts) pairs.emplace_back(a, b);
  for (const auto& [tt, tsrc] : pairs) {
    const SpheroidParam target(tt);
    const SpheroidParam source(tsrc);
    for (int n = 0; n <= max_n; ++n) {
      for (int m = 0; m <= n; ++m) {
        for (int k = 0; 2 * k <= n - m + 1; ++k) {
          Rational sum = 0;
          for (int l = 0; l <= k; ++l)
            sum += coef_vhat_to_u0(n, m, l) * pow(tt, l) * coef_u0_to_vmu(n - 2 * l, m, k - l) * pow(tsrc, k - l);
          const Rational w = coef_w(n, m, k, tt, tsrc);
          const std::string at = where_nmk(n, m, k) + " t_target=" + to_string(tt) + " t_source=" + to_string(tsrc);
          // The top k multiplies V_{m-1,m} = 0, so the double sum only covers 2k <= n-m.
          if (2 * k <= n - m) report.checks[0].record(w == sum, at);
          if (m >= 1) {
            report.checks[5].record(make_rational(n + m + 1, n + m - 2 * k + 1) * coef_w(n, m - 1, k, tt, tsrc) == w, at);
            if (2 * k <= n - m)
              report.checks[6].record(w == make_rational(n + m - 2 * k + 2, n + m + 2) * coef_w(n, m + 1, k, tt, tsrc), at);
          }
        }
        for (Parity p : {Parity::Plus, Parity::Minus}) {
          if (m == 0 && p == Parity::Minus) continue;
          const HarmonicIndex idx{n, m, p};
          TriPoly rhs;
          for (int k = 0; 2 * k <= n - m; ++k)
            rhs += coef_w(n, m, k, tt, tsrc) * garabedian_or_zero(n - 2 * k, m, p, source);
          report.checks[1].record(garabedian_harmonic(idx, target) == rhs, where(idx, tt, tsrc));
        }
      }
    }
  }
  for (const auto& t : ts) {
    for (int n = 0; n <= max_n; ++n) {
      for (int m = 0; m <= n + 1; ++m) {
        for (int k = 0; 2 * k <= n - m + 1; ++k) {
          const std::string at = where_nmk(n, m, k) + " t=" + to_string(t);
          report.checks[2].record(coef_w(n, m, k, t, 0) == coef_v_to_v(n, m, k) * pow(t, k), at);
          report.checks[3].record(w_limit_at_zero_source(n, m, k, t) == coef_v_to_v(n, m, k) * pow(t, k), at);
          if (t != 0) report.checks[4].record(coef_w(n, m, k, 0, t) == coef_v0_from_vmu(n, m, k) * pow(t, k), at);
        }
      }
    }
  }
  report.details = Json{{"max_degree", max_n}, {"t", t_list_json(ts)}};
  return report;
}

SuiteReport suite_monogenic(const VerifyConfig& config) {
  const int max_n = degree_or(config, 6);
  const auto ts = sweep(config);
  SuiteReport report{"monogenic",
                     {{"dirac X = 0"},
                      {"dbar conj(X) = 0"},
                      {"Sc X = V"},
                      {"X equals the explicit V-combination"},
                      {"A = X - conj(X) equals the psi expansion"},
                      {"psi e3 relations"},
                      {"X[t] = sum_k chat t^k X[0]"},
                      {"X[0] = sum_k c0_{n+1} t^k X[t]"},
                      {"X[t_target] = sum_k w X[t_source]"},
                      {"conj(X)[t_target] = sum_k w conj(X)[t_source]"}},
                     {}};
  const SpheroidParam ball = SpheroidParam::ball();
  const QPoly e3 = QPoly::unit(3);
  for (const auto& t : ts) {
    const SpheroidParam sp(t);
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& idx : monogenic_indices(n)) {
        const QPoly x = monogenic(idx, sp);
        const QPoly xbar = conjugate(x);
        const std::string at = where(idx, t);
        report.checks[0].record(dirac(x, false).is_zero(), at);
        report.checks[1].record(dirac(xbar, true).is_zero(), at);
        report.checks[2].record(x.sc() == garabedian_or_zero(n, idx.m, idx.parity, sp), at);
        report.checks[3].record(x == monogenic_from_garabedian(idx, sp), at);
        report.checks[4].record(ambigenic(idx, sp) == ambigenic_from_psi(idx, sp), at);
        for (PsiFamily family : {PsiFamily::Plus, PsiFamily::Minus}) {
          const int s = family == PsiFamily::Plus ? 1 : -1;
          const QPoly lhs = qmul(psi_combo(n, idx.m, family, idx.parity, sp), e3);
          const QPoly rhs =
              Rational(s * sign(idx.parity)) * psi_combo(n, idx.m, family, flip(idx.parity), sp);
          report.checks[5].record(lhs == rhs, at);
        }
        QPoly from_ball;
        QPoly to_ball;
        for (int k = 0; 2 * k <= n - idx.m + 1 && 2 * k <= n; ++k) {
          const HarmonicIndex lower{n - 2 * k, idx.m, idx.parity};
          from_ball += coef_v_to_v(n, idx.m, k) * pow(t, k) * monogenic(lower, ball);
          to_ball += coef_v0_from_vmu(n, idx.m, k) * pow(t, k) * monogenic(lower, sp);
        }
        report.checks[6].record(x == from_ball, at);
        report.checks[7].record(monogenic(idx, ball) == to_ball, at);
      }
    }
  }
  for (const auto& [tt, tsrc] : distinct_pairs(ts)) {
    const SpheroidParam target(tt);
    const SpheroidParam source(tsrc);
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& idx : monogenic_indices(n)) {
        const auto terms = convert_basis(Family::X, idx, tsrc, tt);
        const QPoly rhs = apply_conversion(Family::X, terms, source);
        report.checks[8].record(monogenic(idx, target) == rhs, where(idx, tt, tsrc));
        report.checks[9].record(antimonogenic(idx, target) == conjugate(rhs), where(idx, tt, tsrc));
      }
    }
  }
  report.details = Json{{"max_degree", max_n}, {"t", t_list_json(ts)}};
  return report;
}

/// Records diagonal/positive checks for a labelled Gram matrix.
void record_gram(CheckOutcome& diagonal, CheckOutcome& positive, const GramMatrix& g, const Rational& t) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    positive.record(g.entries[i][i] > 0, g.labels[i] + " t=" + to_string(t));
    for (std::size_t j = i + 1; j < g.size(); ++j)
      diagonal.record(g.entries[i][j] == 0, g.labels[i] + " x " + g.labels[j] + " t=" + to_string(t));
  }
}

std::vector<LabeledQPoly> labelled_family(Family family, int max_n, const SpheroidParam& sp) {
  std::vector<LabeledQPoly> out;
  for (int n = 0; n <= max_n; ++n)
    for (const auto& idx : family_indices(family, n))
      out.push_back({std::string(family_name(family)) + to_string(idx), basis_element(family, idx, sp)});
  return out;
}

SuiteReport suite_orthogonality(const VerifyConfig& config) {
  const int max_n = degree_or(config, 6);
  const auto ts = sweep(config);
  SuiteReport report{"orthogonality",
                     {{"V Gram is diagonal"},
                      {"V Gram has positive diagonal"},
                      {"||V^+|| = ||V^-||"},
                      {"X Gram is diagonal"},
                      {"X Gram has positive diagonal"},
                      {"Z Gram is diagonal"},
                      {"Z Gram has positive diagonal"}},
                     {}};
  Json witnesses = Json::array();
  for (const auto& t : ts) {
    const SpheroidParam sp(t);
    const GramMatrix v = gram(labelled_family(Family::V, max_n, sp), sp);
    record_gram(report.checks[0], report.checks[1], v, t);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string& label = v.labels[i];
      if (label.back() == ')' && label[label.size() - 2] == '-')
        report.checks[2].record(v.entries[i][i] == v.entries[i - 1][i - 1], label + " t=" + to_string(t));
    }
    const GramMatrix x = gram(labelled_family(Family::X, max_n, sp), sp);
    record_gram(report.checks[3], report.checks[4], x, t);
    const GramMatrix z = gram(labelled_family(Family::Z, max_n, sp), sp);
    record_gram(report.checks[5], report.checks[6], z, t);

    // The U family is not L2-orthogonal off the ball; report the first
    // nonzero off-diagonal entry as an illustration.
    if (t != 0) {
      const GramMatrix u = gram(labelled_family(Family::U, std::min(max_n, 4), sp), sp);
      bool found = false;
      for (std::size_t i = 0; i < u.size() && !found; ++i)
        for (std::size_t j = i + 1; j < u.size() && !found; ++j)
          if (u.entries[i][j] != 0) {
            witnesses.push_back(Json{{"t", to_string(t)}, {"row", u.labels[i]}, {"col", u.labels[j]},
                                     {"value_over_pi", to_string(u.entries[i][j])}});
            found = true;
          }
    }
  }
  report.details = Json{{"max_degree", max_n}, {"t", t_list_json(ts)}, {"u_family_off_diagonal", witnesses}};
  return report;
}

std::vector<QPoly> harmonic_vector_basis(int max_n, const SpheroidParam& sp) {
  std::vector<QPoly> out;
  for (int n = 0; n <= max_n; ++n)
    for (const auto& idx : harmonic_indices(n)) {
      const TriPoly& v = garabedian_harmonic(idx, sp);
      out.push_back(QPoly(v, {}, {}));
      out.push_back(QPoly({}, v, {}));
      out.push_back(QPoly({}, {}, v));
    }
  return out;
}

std::vector<QPoly> ambigenic_spanning_set(int max_n, const SpheroidParam& sp) {
  std::vector<QPoly> out;
  for (int n = 0; n <= max_n; ++n)
    for (const auto& idx : monogenic_indices(n)) {
      QPoly x = monogenic(idx, sp);
      out.push_back(conjugate(x));
      out.push_back(std::move(x));
    }
  return out;
}

SuiteReport suite_contragenic(const VerifyConfig& config) {
  const int max_n = degree_or(config, 6);
  const int small_n = std::min(max_n, 5);
  const auto ts = sweep(config);
  SuiteReport report{"contragenic",
                     {{"Z is reduced and harmonic"},
                      {"Z equals the psi expansion"},
                      {"<Z, X> = <Z, conj(X)> = 0"},
                      {"degree-n slice has 2n-1 contragenics"},
                      {"psi expansion vanishes for m = n, n+1"},
                      {"lower psi split reconstructs"},
                      {"upper psi split reconstructs"},
                      {"Z[t_target] = sum_k zC Z[t_source] + zA A[t_source]"},
                      {"dim of contragenic complement = n^2"}},
                     {}};
  Json dims = Json::array();
  for (int n = 1; n <= max_n; ++n)
    report.checks[3].record(contragenic_indices(n).size() == static_cast<std::size_t>(2 * n - 1),
                            "n=" + std::to_string(n));
  for (const auto& t : ts) {
    const SpheroidParam sp(t);
    SpheroidIntegrator integrator(sp);
    std::vector<std::pair<HarmonicIndex, QPoly>> xs;
    for (int j = 0; j <= max_n; ++j)
      for (const auto& xi : monogenic_indices(j)) xs.emplace_back(xi, monogenic(xi, sp));
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& zi : contragenic_indices(n)) {
        const QPoly z = contragenic(zi, sp);
        const std::string at = where(zi, t);
        report.checks[0].record(z[0].is_zero() && z[3].is_zero() && laplacian(z[1]).is_zero() &&
                                    laplacian(z[2]).is_zero(),
                                at);
        report.checks[1].record(z == contragenic_from_psi(zi, sp), at);
        for (const auto& [xi, x] : xs) {
          const bool ok = integrator.inner_product(z, x).is_zero() && integrator.inner_product(z, conjugate(x)).is_zero();
          report.checks[2].record(ok, at + " against X" + to_string(xi));
        }
      }
      for (int m = n; m <= n + 1; ++m)
        for (Parity p : {Parity::Plus, Parity::Minus})
          report.checks[4].record(contragenic_from_psi({n, m, p}, sp).is_zero(), where({n, m, p}, t));
    }
    for (int n = 1; n <= small_n; ++n) {
      for (int m = 1; m <= n + 1; ++m) {
        for (Parity p : {Parity::Plus, Parity::Minus}) {
          const HarmonicIndex idx{n, m, p};
          const VzaSplit lower = vza_split(idx, sp, SplitSide::Lower);
          report.checks[5].record(lower.reconstruct() == lower.target, where(idx, t));
          const VzaSplit upper = vza_split(idx, sp, SplitSide::Upper);
          report.checks[6].record(upper.reconstruct() == upper.target, where(idx, t));
        }
      }
    }
    for (int n = 1; n <= small_n; ++n) {
      const std::size_t dim =
          orthogonal_complement_dimension(harmonic_vector_basis(n, sp), ambigenic_spanning_set(n, sp), sp);
      report.checks[8].record(dim == static_cast<std::size_t>(n * n), "n=" + std::to_string(n) + " t=" + to_string(t));
      dims.push_back(Json{{"n", n}, {"t", to_string(t)}, {"dimension", dim}});
    }
  }
  for (const auto& [tt, tsrc] : distinct_pairs(ts)) {
    const SpheroidParam target(tt);
    const SpheroidParam source(tsrc);
    for (int n = 1; n <= small_n; ++n) {
      for (const auto& zi : contragenic_indices(n)) {
        const auto terms = contragenic_decomposition(zi, tt, tsrc);
        report.checks[7].record(contragenic(zi, target) == assemble_decomposition(terms, source),
                                where(zi, tt, tsrc));
      }
    }
  }
  report.details = Json{{"max_degree", max_n}, {"t", t_list_json(ts)}, {"dimensions", dims}};
  return report;
}

SuiteReport suite_intersection(const VerifyConfig& config) {
  const int max_n = degree_or(config, 6);
  SuiteReport report{"intersection",
                     {{"<Z_{n,0}[t], X[0]> = <Z_{n,0}[t], conj(X)[0]> = 0"},
                      {"each Z_{n,m}[t], m >= 1, has a ball ambigenic witness"},
                      {"span of Z_{j,0}[t], j <= n, has dimension >= n"}},
                     {}};
  Json per_t = Json::array();
  Json skipped = Json::array();
  for (const auto& t : sweep(config)) {
    if (t == 0) {
      skipped.push_back(to_string(t));
      continue;
    }
    const SpheroidParam sp(t);
    Json entries = Json::array();
    std::vector<LabeledQPoly> universal;
    for (int n = 1; n <= max_n; ++n) {
      const IntersectionReport r = intersection_report(n, sp);
      const std::string at = "n=" + std::to_string(n) + " t=" + to_string(t);
      report.checks[0].record(r.part_i_holds,
                              at + (r.part_i_counterexample ? " against X" + to_string(*r.part_i_counterexample) : ""));
      Json witnesses = Json::array();
      for (const auto& w : r.part_ii) {
        report.checks[1].record(w.ambigenic_index.has_value(), where(w.contragenic_index, t));
        Json entry{{"contragenic", to_string(w.contragenic_index)}};
        entry["ambigenic"] = w.ambigenic_index ? Json(to_string(*w.ambigenic_index)) : Json(nullptr);
        entry["value_over_pi"] = to_string(w.value.coeff);
        witnesses.push_back(std::move(entry));
      }
      universal.push_back({"Z(" + std::to_string(n) + ",0,+)", contragenic({n, 0, Parity::Plus}, sp)});
      const std::size_t rank = gram(universal, SpheroidParam::ball()).rank();
      report.checks[2].record(rank >= static_cast<std::size_t>(n), at);
      entries.push_back(Json{{"n", n},
                             {"part_i_checks", r.part_i_checks},
                             {"part_i_holds", r.part_i_holds},
                             {"part_ii", witnesses},
                             {"universal_dimension", rank}});
    }
    per_t.push_back(Json{{"t", to_string(t)}, {"reports", entries}});
  }
  report.details = Json{{"max_degree", max_n}, {"results", per_t}};
  if (!skipped.empty()) report.details["skipped_t"] = skipped;
  return report;
}

SuiteReport suite_norms(const VerifyConfig& config) {
  const int max_n = degree_or(config, 5);
  std::vector<Rational> ts = config.t_values;
  if (ts.empty()) ts = {make_rational(1, 4), make_rational(9, 16)};
  SuiteReport report{"norms", {{"closed-form ||V||^2 equals direct integration"}}, {}};
  Json skipped = Json::array();
  for (const auto& t : ts) {
    const SpheroidParam sp(t);
    if (!sp.is_prolate() || !sp.rational_mu()) {
      skipped.push_back(to_string(t));
      continue;
    }
    SpheroidIntegrator integrator(sp);
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& idx : harmonic_indices(n)) {
        const TriPoly& v = garabedian_harmonic(idx, sp);
        const PiRational direct = integrator.integrate_product(v, v);
        report.checks[0].record(direct == garabedian_norm_closed_form(n, idx.m, idx.parity, sp), where(idx, t));
      }
    }
  }
  report.details = Json{{"max_degree", max_n}, {"t", t_list_json(ts)}};
  if (!skipped.empty()) report.details["skipped_t_without_rational_mu"] = skipped;
  return report;
}

using SuiteFn = SuiteReport (*)(const VerifyConfig&);

const std::vector<std::pair<std::string_view, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string_view, SuiteFn>> suites{
      {"bbs", suite_bbs},
      {"roundtrip", suite_roundtrip},
      {"cvv", suite_cvv},
      {"monogenic", suite_monogenic},
      {"orthogonality", suite_orthogonality},
      {"contragenic", suite_contragenic},
      {"intersection", suite_intersection},
      {"norms", suite_norms},
  };
  return suites;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view suite, const VerifyConfig& config) {
  for (const auto& [name, fn] : registry())
    if (name == suite) return fn(config);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace sph
