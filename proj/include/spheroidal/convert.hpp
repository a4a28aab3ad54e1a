#pragma once

#include "spheroidal/basis.hpp"
#include "spheroidal/coefficients.hpp"

#include <map>
#include <string_view>
#include <tuple>
#include <vector>

namespace sph {

/// Named coefficient families, as exposed by the `coeffs` subcommand.
enum class CoeffFamily { UToU, VToV, VhatToU0, U0ToUmu, U0ToVmu, VmuFromUmu, UmuFromVmu, V0FromVmu, W };

CoeffFamily parse_coeff_family(std::string_view text);
std::string_view coeff_family_name(CoeffFamily family);
const std::vector<CoeffFamily>& all_coeff_families();

/// Evaluates one family. Only W reads the two parameters.
Rational coefficient(CoeffFamily family, int n, int m, int k, const Rational& t_target = 0,
                     const Rational& t_source = 0);

/// One term  coefficient * element(index)[t_source]; the coefficient
/// already includes the power of t.
struct ConversionTerm {
  int k = 0;
  HarmonicIndex index;
  Rational coefficient;
};

/// Expansion of family element idx at t_target in elements at t_source, for
/// U, V or X. Zero coefficients are omitted.
std::vector<ConversionTerm> convert_basis(Family family, const HarmonicIndex& idx, const Rational& t_source,
                                          const Rational& t_target);

/// Evaluates an expansion on the source spheroid.
QPoly apply_conversion(Family family, const std::vector<ConversionTerm>& terms, const SpheroidParam& source);

/// All conversion coefficients up to a degree, keyed by (n, m, k).
struct ConversionMatrix {
  Family family = Family::U;
  Rational t_source;
  Rational t_target;
  std::map<std::tuple<int, int, int>, Rational> entries;

  Rational at(int n, int m, int k) const;
};

ConversionMatrix conversion_matrix(Family family, int max_degree, const Rational& t_source, const Rational& t_target);

}  // namespace sph
