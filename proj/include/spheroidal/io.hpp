#pragma once

// JSON and CSV forms of polynomials. Rationals are always "p/q" strings.
//   TriPoly: [{"e":[a,b,c],"c":"p/q"}, ...] in graded-lex order
//   QPoly:   {"s":TriPoly,"e1":TriPoly,"e2":TriPoly,"e3":TriPoly}

#include "spheroidal/harmonics.hpp"
#include "spheroidal/quat.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace sph {

using Json = nlohmann::ordered_json;

Json to_json(const TriPoly& p);
Json to_json(const QPoly& q);
Json to_json(const HarmonicIndex& idx);

TriPoly tripoly_from_json(const Json& j);
QPoly qpoly_from_json(const Json& j);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_escape(const std::string& field);
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

/// Appends rows  <prefix fields...>, component, a, b, c, coefficient.
void write_qpoly_csv_rows(std::ostream& os, const std::vector<std::string>& prefix, const QPoly& q);

inline const std::vector<std::string>& qpoly_component_names() {
  static const std::vector<std::string> names{"s", "e1", "e2", "e3"};
  return names;
}

}  // namespace sph
