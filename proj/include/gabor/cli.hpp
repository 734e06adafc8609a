#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace gabor {

/// Entry point of the gabor-sections tool. Returns the process exit code:
/// 0 success, 1 configuration/input error, 2 numerical failure. Errors are
/// reported as a single machine-parsable line on `err`.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Runs the built-in example suite; returns the number of failures.
int run_selftest(std::ostream& out);

/// Worker count by precedence: flag, GABOR_SECTIONS_THREADS, config, hardware.
int resolve_threads(std::optional<int> flag, int config_value);

}  // namespace gabor
