#include "spheroidal/basis.hpp"

#include "spheroidal/monogenic.hpp"

#include <stdexcept>

namespace sph {

Family parse_family(std::string_view text) {
  if (text == "U") return Family::U;
  if (text == "V") return Family::V;
  if (text == "X") return Family::X;
  if (text == "A") return Family::A;
  if (text == "Z") return Family::Z;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected U, V, X, A or Z)");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::U: return "U";
    case Family::V: return "V";
    case Family::X: return "X";
    case Family::A: return "A";
    case Family::Z: return "Z";
  }
  return "?";
}

std::vector<HarmonicIndex> family_indices(Family family, int n) {
  switch (family) {
    case Family::U:
    case Family::V: return harmonic_indices(n);
    case Family::X:
    case Family::A: return monogenic_indices(n);
    case Family::Z: return n >= 1 ? contragenic_indices(n) : std::vector<HarmonicIndex>{};
  }
  return {};
}

QPoly basis_element(Family family, const HarmonicIndex& idx, const SpheroidParam& sp) {
  switch (family) {
    case Family::U: return QPoly::scalar(spheroidal_solid_harmonic(idx, sp));
    case Family::V: return QPoly::scalar(garabedian_harmonic(idx, sp));
    case Family::X: return monogenic(idx, sp);
    case Family::A: return ambigenic(idx, sp);
    case Family::Z: return contragenic(idx, sp);
  }
  return {};
}

}  // namespace sph
