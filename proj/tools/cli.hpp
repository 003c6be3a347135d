#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name) and returns the exit status.
/// CSV and reports go to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 9 significant digits, NaN as `nan`.
std::string format_number(double v);

/// Grid text `lo:hi:step`, a comma list, or a single value.
std::vector<double> parse_grid(const std::string& text);

}  // namespace eur::cli
