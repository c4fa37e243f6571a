#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chtri::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Angle in radians from "pi", "pi/<k>", "<c>pi/<k>", "acos(<x>)" or a raw number.
std::optional<double> parse_angle(std::string_view text);

/// Runs the command line (args excludes the program name). Output is written
/// to `out` in a single write on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chtri::cli
