#include "cli_app.hpp"

#include "spheroidal/basis.hpp"
#include "spheroidal/convert.hpp"
#include "spheroidal/errors.hpp"
#include "spheroidal/integrals.hpp"
#include "spheroidal/io.hpp"
#include "spheroidal/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sph::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  // Config files hand a comma list over as several values; rejoin them.
  std::vector<std::string> t;
  std::optional<int> max_degree;

  std::string t_or_ball() const {
    if (t.empty()) return "0";
    std::string joined = t.front();
    for (std::size_t i = 1; i < t.size(); ++i) joined += "," + t[i];
    return joined;
  }
  std::string format = "json";
  std::string out;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) {
    const auto b = current.find_first_not_of(" \t");
    const auto e = current.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : current.substr(b, e - b + 1));
  }
  return parts;
}

Rational parse_t(const std::string& text) {
  Rational t = parse_rational(text);
  SpheroidParam check(t);  // rejects t >= 1
  return t;
}

std::vector<Rational> parse_t_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw UsageError("empty entry in parameter list '" + text + "'");
    out.push_back(parse_t(part));
  }
  if (out.empty()) throw UsageError("no parameter values given");
  return out;
}

bool csv(const Common& c) { return c.format == "csv"; }

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

/// Writes to --out when given, else to the default stream.
class Sink {
public:
  Sink(const Common& c, std::ostream& fallback) : stream_(&fallback) {
    if (!c.out.empty()) {
      file_.open(c.out, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + c.out + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_json(const Common& c, std::ostream& out, const Json& j) {
  Sink sink(c, out);
  *sink << j.dump(2) << '\n';
}

HarmonicIndex make_index(int n, int m, const std::string& parity) { return {n, m, parse_parity(parity)}; }

// --- basis -------------------------------------------------------------------

struct BasisArgs {
  std::vector<std::string> families;
};

void cmd_basis(const Common& c, const BasisArgs& a, std::ostream& out) {
  std::vector<Family> families;
  for (const auto& f : a.families)
    for (const auto& part : split(f, ',')) families.push_back(parse_family(part));
  if (families.empty()) throw UsageError("basis needs at least one --family");
  const int max_n = c.max_degree.value_or(2);
  const auto ts = parse_t_list(c.t_or_ball());
  if (csv(c)) {
    Sink sink(c, out);
    write_csv_row(*sink, {"family", "t", "n", "m", "parity", "component", "a", "b", "c", "coefficient"});
    for (Family f : families)
      for (const auto& t : ts)
        for (int n = 0; n <= max_n; ++n)
          for (const auto& idx : family_indices(f, n))
            write_qpoly_csv_rows(*sink,
                                 {std::string(family_name(f)), to_string(t), std::to_string(idx.n),
                                  std::to_string(idx.m), std::string(1, symbol(idx.parity))},
                                 basis_element(f, idx, SpheroidParam(t)));
    return;
  }
  Json blocks = Json::array();
  for (Family f : families) {
    const bool scalar = f == Family::U || f == Family::V;
    for (const auto& t : ts) {
      const SpheroidParam sp(t);
      Json elements = Json::array();
      for (int n = 0; n <= max_n; ++n)
        for (const auto& idx : family_indices(f, n)) {
          const QPoly q = basis_element(f, idx, sp);
          elements.push_back(Json{{"index", to_json(idx)}, {"poly", scalar ? to_json(q.sc()) : to_json(q)}});
        }
      blocks.push_back(Json{{"family", family_name(f)}, {"t", to_string(t)}, {"max_degree", max_n},
                            {"elements", elements}});
    }
  }
  emit_json(c, out, blocks);
}

// --- coeffs ------------------------------------------------------------------

struct CoeffArgs {
  std::string family;
  std::optional<int> n, m, k;
  std::string t_target = "0";
  std::string t_source = "0";
};

void cmd_coeffs(const Common& c, const CoeffArgs& a, std::ostream& out) {
  std::vector<CoeffFamily> families;
  if (a.family == "all")
    families = all_coeff_families();
  else
    families.push_back(parse_coeff_family(a.family));
  const Rational tt = parse_t(a.t_target);
  const Rational ts = parse_t(a.t_source);
  struct Row {
    CoeffFamily family;
    int n, m, k;
    Rational value;
  };
  std::vector<Row> rows;
  for (CoeffFamily f : families) {
    if (a.n && a.m && a.k) {
      rows.push_back({f, *a.n, *a.m, *a.k, coefficient(f, *a.n, *a.m, *a.k, tt, ts)});
      continue;
    }
    if (a.n || a.m || a.k) throw UsageError("--n, --m and --k must be given together");
    const int max_n = c.max_degree.value_or(4);
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= n + 1; ++m)
        for (int k = 0; 2 * k <= n + 1; ++k) rows.push_back({f, n, m, k, coefficient(f, n, m, k, tt, ts)});
  }
  if (csv(c)) {
    Sink sink(c, out);
    const bool many = families.size() > 1;
    if (many)
      write_csv_row(*sink, {"family", "n", "m", "k", "value"});
    else
      write_csv_row(*sink, {"n", "m", "k", "value"});
    for (const auto& r : rows) {
      std::vector<std::string> fields{std::to_string(r.n), std::to_string(r.m), std::to_string(r.k),
                                      to_string(r.value)};
      if (many) fields.insert(fields.begin(), std::string(coeff_family_name(r.family)));
      write_csv_row(*sink, fields);
    }
    return;
  }
  Json j_rows = Json::array();
  for (const auto& r : rows)
    j_rows.push_back(Json{{"family", coeff_family_name(r.family)}, {"n", r.n}, {"m", r.m}, {"k", r.k},
                          {"value", to_string(r.value)}});
  emit_json(c, out, Json{{"t_target", to_string(tt)}, {"t_source", to_string(ts)}, {"rows", j_rows}});
}

// --- gram --------------------------------------------------------------------

struct GramArgs {
  std::string family = "V";
};

void cmd_gram(const Common& c, const GramArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  const int max_n = c.max_degree.value_or(3);
  const auto ts = parse_t_list(c.t_or_ball());
  Json blocks = Json::array();
  Sink sink(c, out);
  for (const auto& t : ts) {
    const SpheroidParam sp(t);
    std::vector<LabeledQPoly> elements;
    for (int n = 0; n <= max_n; ++n)
      for (const auto& idx : family_indices(f, n))
        elements.push_back({std::string(family_name(f)) + to_string(idx), basis_element(f, idx, sp)});
    const GramMatrix g = gram(elements, sp);
    if (csv(c)) {
      // Legend row, then one row per element; entries are multiples of pi.
      std::vector<std::string> header{"t=" + to_string(t)};
      header.insert(header.end(), g.labels.begin(), g.labels.end());
      write_csv_row(*sink, header);
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<std::string> row{g.labels[i]};
        for (const auto& e : g.entries[i]) row.push_back(to_string(e));
        write_csv_row(*sink, row);
      }
      continue;
    }
    Json entries = Json::array();
    for (const auto& row : g.entries) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(to_string(e));
      entries.push_back(std::move(r));
    }
    blocks.push_back(Json{{"family", family_name(f)},
                          {"t", to_string(t)},
                          {"unit", "pi"},
                          {"labels", g.labels},
                          {"diagonal", g.is_diagonal()},
                          {"rank", g.rank()},
                          {"entries", entries}});
  }
  if (!csv(c)) *sink << blocks.dump(2) << '\n';
}

// --- convert -----------------------------------------------------------------

struct ConvertArgs {
  std::string family = "U";
  std::optional<int> n, m;
  std::string parity = "+";
  std::string t_source = "0";
  std::string t_target = "0";
};

void cmd_convert(const Common& c, const ConvertArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  const Rational ts = parse_t(a.t_source);
  const Rational tt = parse_t(a.t_target);
  struct Row {
    HarmonicIndex source_index;
    ConversionTerm term;
  };
  std::vector<Row> rows;
  if (a.n || a.m) {
    if (!a.n || !a.m) throw UsageError("--n and --m must be given together");
    const HarmonicIndex idx = make_index(*a.n, *a.m, a.parity);
    for (const auto& term : convert_basis(f, idx, ts, tt)) rows.push_back({idx, term});
  } else {
    const ConversionMatrix matrix = conversion_matrix(f, c.max_degree.value_or(4), ts, tt);
    for (const auto& [key, value] : matrix.entries) {
      const auto [n, m, k] = key;
      rows.push_back({{n, m, Parity::Plus}, {k, {n - 2 * k, m, Parity::Plus}, value}});
    }
  }
  if (csv(c)) {
    Sink sink(c, out);
    write_csv_row(*sink, {"n", "m", "parity", "k", "target_n", "coefficient"});
    for (const auto& r : rows)
      write_csv_row(*sink, {std::to_string(r.source_index.n), std::to_string(r.source_index.m),
                            std::string(1, symbol(r.source_index.parity)), std::to_string(r.term.k),
                            std::to_string(r.term.index.n), to_string(r.term.coefficient)});
    return;
  }
  Json terms = Json::array();
  for (const auto& r : rows)
    terms.push_back(Json{{"element", to_json(r.source_index)},
                         {"k", r.term.k},
                         {"term", to_json(r.term.index)},
                         {"coefficient", to_string(r.term.coefficient)}});
  emit_json(c, out, Json{{"family", family_name(f)}, {"t_target", to_string(tt)}, {"t_source", to_string(ts)},
                         {"expansion", terms}});
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  std::optional<int> n;
};

int cmd_verify(const Common& c, const VerifyArgs& a, std::ostream& out) {
  if (a.suites.empty()) throw UsageError("verify needs --suite");
  std::vector<std::string> names;
  for (const auto& s : a.suites)
    for (const auto& part : split(s, ',')) {
      if (part == "all")
        for (auto name : suite_names()) names.emplace_back(name);
      else
        names.push_back(part);
    }
  for (const auto& name : names) {
    bool known = false;
    for (auto s : suite_names()) known = known || s == name;
    if (!known) throw UsageError("unknown suite '" + name + "'");
  }
  VerifyConfig config;
  config.max_degree = a.n ? a.n : c.max_degree;
  if (!c.t.empty()) config.t_values = parse_t_list(c.t_or_ball());
  bool all_pass = true;
  Json reports = Json::array();
  std::vector<SuiteReport> results;
  for (const auto& name : names) {
    results.push_back(run_suite(name, config));
    all_pass = all_pass && results.back().passed();
  }
  Sink sink(c, out);
  if (csv(c)) {
    write_csv_row(*sink, {"suite", "identity", "cases", "passed", "counterexample"});
    for (const auto& r : results)
      for (const auto& chk : r.checks)
        write_csv_row(*sink, {r.suite, chk.identity, std::to_string(chk.cases), chk.passed() ? "true" : "false",
                              chk.counterexample.value_or("")});
  } else {
    for (const auto& r : results) reports.push_back(r.to_json());
    *sink << Json{{"passed", all_pass}, {"suites", reports}}.dump(2) << '\n';
  }
  return all_pass ? kPass : kCounterexample;
}

// --- plotdata ----------------------------------------------------------------

struct Axis {
  double lo = 0;
  double hi = 0;
  int count = 0;

  double at(int i) const { return count == 1 ? lo : lo + (hi - lo) * i / (count - 1); }
};

Axis parse_axis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("grid axis must be lo:hi:count, got '" + text + "'");
  Axis axis;
  try {
    axis.lo = std::stod(parts[0]);
    axis.hi = std::stod(parts[1]);
    std::size_t used = 0;
    axis.count = std::stoi(parts[2], &used);
    if (used != parts[2].size() || axis.count < 0) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw UsageError("malformed grid axis '" + text + "'");
  }
  return axis;
}

struct PlotArgs {
  std::string family = "U";
  int n = 0;
  int m = 0;
  std::string parity = "+";
  std::string coords = "cartesian";
  std::string a0 = "-0.5:0.5:3";
  std::string a1 = "-0.5:0.5:3";
  std::string a2 = "0:0:1";
};

void cmd_plotdata(const Common& c, const PlotArgs& a, std::ostream& out) {
  const Family f = parse_family(a.family);
  const auto ts = parse_t_list(c.t_or_ball());
  if (ts.size() != 1) throw UsageError("plotdata takes a single --t value");
  const SpheroidParam sp(ts.front());
  const HarmonicIndex idx = make_index(a.n, a.m, a.parity);
  const bool spheroidal = a.coords == "spheroidal";
  if (!spheroidal && a.coords != "cartesian") throw UsageError("--coords must be cartesian or spheroidal");
  if (spheroidal && !sp.is_prolate())
    throw UnsupportedRegime("spheroidal coordinates require a prolate parameter 0 < t < 1");
  const QPoly q = basis_element(f, idx, sp);
  const bool scalar = f == Family::U || f == Family::V;
  const Axis ax0 = parse_axis(a.a0);
  const Axis ax1 = parse_axis(a.a1);
  const Axis ax2 = parse_axis(a.a2);

  Sink sink(c, out);
  std::vector<std::string> header;
  if (spheroidal) header = {"u", "v", "phi"};
  header.insert(header.end(), {"x0", "x1", "x2"});
  if (scalar)
    header.push_back("value");
  else
    header.insert(header.end(), {"s", "e1", "e2", "e3"});
  if (spheroidal && f == Family::U) header.push_back("value_via_coords");
  write_csv_row(*sink, header);
  for (int i = 0; i < ax0.count; ++i)
    for (int j = 0; j < ax1.count; ++j)
      for (int k = 0; k < ax2.count; ++k) {
        const double p0 = ax0.at(i), p1 = ax1.at(j), p2 = ax2.at(k);
        std::vector<std::string> row;
        std::array<double, 3> x{p0, p1, p2};
        if (spheroidal) {
          x = prolate_to_cartesian(sp, p0, p1, p2);
          row = {format_double(p0), format_double(p1), format_double(p2)};
        }
        for (double xi : x) row.push_back(format_double(xi));
        for (int comp = 0; comp < (scalar ? 1 : 4); ++comp) row.push_back(format_double(q[comp].evaluate(x)));
        if (spheroidal && f == Family::U) row.push_back(format_double(eval_via_coords(idx, sp, p0, p1, p2)));
        write_csv_row(*sink, row);
      }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spheroidal harmonics, monogenics and contragenics"};
  app.name("spheroidal");
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");

  Common common;
  app.add_option("--t", common.t, "comma-separated list of rationals t = mu^2 < 1 (p/q form)");
  app.add_option("--max-degree", common.max_degree, "largest degree n")->check(CLI::NonNegativeNumber);
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", common.out, "output file (default stdout)");

  BasisArgs basis;
  auto* basis_cmd = app.add_subcommand("basis", "emit U, V, X, A or Z polynomials")->fallthrough();
  basis_cmd->add_option("--family", basis.families, "families (U,V,X,A,Z)");

  CoeffArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "tabulate conversion coefficients")->fallthrough();
  coeffs_cmd->add_option("--family", coeffs.family, "coefficient family or 'all'")->required();
  coeffs_cmd->add_option("--n", coeffs.n);
  coeffs_cmd->add_option("--m", coeffs.m);
  coeffs_cmd->add_option("--k", coeffs.k);
  coeffs_cmd->add_option("--t-target", coeffs.t_target, "target parameter (W family)");
  coeffs_cmd->add_option("--t-source", coeffs.t_source, "source parameter (W family)");

  GramArgs gram_args;
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a family (entries are multiples of pi)")->fallthrough();
  gram_cmd->add_option("--family", gram_args.family, "U, V, X, A or Z");

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "expand U, V or X at t-target in elements at t-source")
                          ->fallthrough();
  convert_cmd->add_option("--family", convert.family, "U, V or X");
  convert_cmd->add_option("--n", convert.n);
  convert_cmd->add_option("--m", convert.m);
  convert_cmd->add_option("--parity", convert.parity)->check(CLI::IsMember({"+", "-"}));
  convert_cmd->add_option("--t-source", convert.t_source);
  convert_cmd->add_option("--t-target", convert.t_target);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run identity suites")->fallthrough();
  verify_cmd->add_option("--suite", verify.suites, "bbs, roundtrip, cvv, monogenic, orthogonality, contragenic, "
                                                   "intersection, norms or all");
  verify_cmd->add_option("--n", verify.n, "largest degree (overrides --max-degree)")->check(CLI::NonNegativeNumber);

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plotdata", "sample a basis function on a grid (CSV)")->fallthrough();
  plot_cmd->add_option("--family", plot.family);
  plot_cmd->add_option("--n", plot.n);
  plot_cmd->add_option("--m", plot.m);
  plot_cmd->add_option("--parity", plot.parity)->check(CLI::IsMember({"+", "-"}));
  plot_cmd->add_option("--coords", plot.coords)->check(CLI::IsMember({"cartesian", "spheroidal"}));
  plot_cmd->add_option("--axis0", plot.a0, "x0 or u as lo:hi:count");
  plot_cmd->add_option("--axis1", plot.a1, "x1 or v as lo:hi:count");
  plot_cmd->add_option("--axis2", plot.a2, "x2 or phi as lo:hi:count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*basis_cmd) cmd_basis(common, basis, out);
    if (*coeffs_cmd) cmd_coeffs(common, coeffs, out);
    if (*gram_cmd) cmd_gram(common, gram_args, out);
    if (*convert_cmd) cmd_convert(common, convert, out);
    if (*verify_cmd) return cmd_verify(common, verify, out);
    if (*plot_cmd) cmd_plotdata(common, plot, out);
  } catch (const std::exception& e) {
    // Invalid indices, malformed rationals, t >= 1 and unsupported regimes.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kPass;
}

}  // namespace sph::cli
