#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxgrowth::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Human-readable text,
/// or a single JSON document with `--json`, goes to `out`; diagnostics and
/// usage go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxgrowth::cli
