#include "spheroidal/convert.hpp"

#include <stdexcept>
#include <string>

namespace sph {

namespace {

struct NamedFamily {
  CoeffFamily family;
  std::string_view name;
};

constexpr NamedFamily kNames[] = {
    {CoeffFamily::UToU, "U_to_U"},           {CoeffFamily::VToV, "V_to_V"},
    {CoeffFamily::VhatToU0, "Vhat_to_U0"},   {CoeffFamily::U0ToUmu, "U0_to_Umu"},
    {CoeffFamily::U0ToVmu, "U0_to_Vmu"},     {CoeffFamily::VmuFromUmu, "Vmu_from_Umu"},
    {CoeffFamily::UmuFromVmu, "Umu_from_Vmu"}, {CoeffFamily::V0FromVmu, "V0_from_Vmu"},
    {CoeffFamily::W, "W_mut_mu"},
};

int max_order_excess(Family family) {
  switch (family) {
    case Family::U:
    case Family::V: return 0;
    case Family::X: return 1;
    default: throw std::invalid_argument("conversion supports U, V and X only");
  }
}

}  // namespace

CoeffFamily parse_coeff_family(std::string_view text) {
  for (const auto& entry : kNames)
    if (entry.name == text) return entry.family;
  throw std::invalid_argument("unknown coefficient family '" + std::string(text) + "'");
}

std::string_view coeff_family_name(CoeffFamily family) {
  for (const auto& entry : kNames)
    if (entry.family == family) return entry.name;
  return "?";
}

const std::vector<CoeffFamily>& all_coeff_families() {
  static const std::vector<CoeffFamily> families = [] {
    std::vector<CoeffFamily> out;
    for (const auto& entry : kNames) out.push_back(entry.family);
    return out;
  }();
  return families;
}

Rational coefficient(CoeffFamily family, int n, int m, int k, const Rational& t_target, const Rational& t_source) {
  switch (family) {
    case CoeffFamily::UToU: return coef_u_to_u(n, m, k);
    case CoeffFamily::VToV: return coef_v_to_v(n, m, k);
    case CoeffFamily::VhatToU0: return coef_vhat_to_u0(n, m, k);
    case CoeffFamily::U0ToUmu: return coef_u0_to_umu(n, m, k);
    case CoeffFamily::U0ToVmu: return coef_u0_to_vmu(n, m, k);
    case CoeffFamily::VmuFromUmu: return coef_vmu_from_umu(n, m, k);
    case CoeffFamily::UmuFromVmu: return coef_umu_from_vmu(n, m, k);
    case CoeffFamily::V0FromVmu: return coef_v0_from_vmu(n, m, k);
    case CoeffFamily::W: return coef_w(n, m, k, t_target, t_source);
  }
  return 0;
}

std::vector<ConversionTerm> convert_basis(Family family, const HarmonicIndex& idx, const Rational& t_source,
                                          const Rational& t_target) {
  validate_index(idx, max_order_excess(family));
  std::vector<ConversionTerm> terms;
  for (int k = 0; 2 * k <= idx.n; ++k) {
    const Rational c = family == Family::U ? coef_u_mu_to_u_mu(idx.n, idx.m, k, t_target, t_source)
                                           : coef_w(idx.n, idx.m, k, t_target, t_source);
    if (c != 0) terms.push_back({k, {idx.n - 2 * k, idx.m, idx.parity}, c});
  }
  return terms;
}

QPoly apply_conversion(Family family, const std::vector<ConversionTerm>& terms, const SpheroidParam& source) {
  max_order_excess(family);
  QPoly sum;
  for (const auto& term : terms) {
    // V_{j,j+1} vanishes; it can appear with a nonzero coefficient in X-style
    // index ranges.
    if (family == Family::V && term.index.m > term.index.n) continue;
    sum += term.coefficient * basis_element(family, term.index, source);
  }
  return sum;
}

Rational ConversionMatrix::at(int n, int m, int k) const {
  auto it = entries.find({n, m, k});
  return it == entries.end() ? Rational(0) : it->second;
}

ConversionMatrix conversion_matrix(Family family, int max_degree, const Rational& t_source, const Rational& t_target) {
  const int excess = max_order_excess(family);
  ConversionMatrix matrix{family, t_source, t_target, {}};
  for (int n = 0; n <= max_degree; ++n)
    for (int m = 0; m <= n + excess; ++m)
      for (const auto& term : convert_basis(family, {n, m, Parity::Plus}, t_source, t_target))
        matrix.entries[{n, m, term.k}] = term.coefficient;
  return matrix;
}

}  // namespace sph
