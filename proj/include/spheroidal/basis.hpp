#pragma once

#include "spheroidal/harmonics.hpp"
#include "spheroidal/quat.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sph {

/// Polynomial families that can be enumerated and emitted.
enum class Family { U, V, X, A, Z };

Family parse_family(std::string_view text);
std::string_view family_name(Family family);

/// Indices of `family` with degree exactly n, in emission order.
std::vector<HarmonicIndex> family_indices(Family family, int n);

/// The family member as a quaternion polynomial (U and V are scalar).
QPoly basis_element(Family family, const HarmonicIndex& idx, const SpheroidParam& sp);

}  // namespace sph
