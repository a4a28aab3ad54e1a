#pragma once

// Identity suites behind the `verify` subcommand. Each check records how
// many cases it evaluated and the first failing case.

#include "spheroidal/io.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sph {

struct CheckOutcome {
  CheckOutcome(std::string name) : identity(std::move(name)) {}  // NOLINT(google-explicit-constructor)

  std::string identity;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample; }
  /// Records one case; keeps only the first failure.
  void record(bool ok, const std::string& where);
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckOutcome> checks;
  Json details = Json::object();

  bool passed() const;
  Json to_json() const;
};

struct VerifyConfig {
  /// Suite default when unset.
  std::optional<int> max_degree;
  /// Parameters to sweep; the suite default (1/4, 9/16, -1, -3) when empty.
  std::vector<Rational> t_values;
};

const std::vector<std::string_view>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view suite, const VerifyConfig& config);

}  // namespace sph
