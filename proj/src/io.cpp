#include "spheroidal/io.hpp"

#include <stdexcept>

namespace sph {

Json to_json(const TriPoly& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) out.push_back(Json{{"e", mono.e}, {"c", to_string(c)}});
  return out;
}

Json to_json(const QPoly& q) {
  Json out = Json::object();
  for (int i = 0; i < 4; ++i) out[qpoly_component_names()[i]] = to_json(q[i]);
  return out;
}

Json to_json(const HarmonicIndex& idx) {
  return Json{{"n", idx.n}, {"m", idx.m}, {"parity", std::string(1, symbol(idx.parity))}};
}

TriPoly tripoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  TriPoly p;
  for (const auto& term : j) {
    const auto e = term.at("e").get<std::array<int, 3>>();
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent in polynomial JSON");
    p.add_term(Monomial{e}, parse_rational(term.at("c").get<std::string>()));
  }
  return p;
}

QPoly qpoly_from_json(const Json& j) {
  QPoly q;
  for (int i = 0; i < 4; ++i) {
    const auto& name = qpoly_component_names()[i];
    if (j.contains(name)) q[i] = tripoly_from_json(j.at(name));
  }
  return q;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(fields[i]);
  }
  os << '\n';
}

void write_qpoly_csv_rows(std::ostream& os, const std::vector<std::string>& prefix, const QPoly& q) {
  for (int i = 0; i < 4; ++i) {
    for (const auto& [mono, c] : q[i].terms()) {
      std::vector<std::string> row = prefix;
      row.push_back(qpoly_component_names()[i]);
      for (int e : mono.e) row.push_back(std::to_string(e));
      row.push_back(to_string(c));
      write_csv_row(os, row);
    }
  }
}

}  // namespace sph
