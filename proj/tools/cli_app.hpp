#pragma once

#include <iosfwd>

namespace sph::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kCounterexample = 1, kUsage = 2 };

/// Runs the tool with the given arguments. Data goes to `out` unless --out
/// names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sph::cli
