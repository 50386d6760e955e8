#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyhankel::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_computation = 3;

/// Runs one subcommand. args excludes the program name. Records go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polyhankel::cli
