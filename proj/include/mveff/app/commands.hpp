#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mveff::app {

/// Default simulation seed; the MVEFF_SEED environment variable overrides it.
inline constexpr unsigned long long kDefaultSeed = 20240601ULL;

/// Parses a grid given either as "lo:hi:step" or as a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

/// Runs one command line. Returns 0 on success, 1 on invalid input or usage
/// and 2 on numerical failure; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload: `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mveff::app
