#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace densewin::tools {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;  // oracle-check mismatch
inline constexpr int exit_bad_flags = 2;
inline constexpr int exit_parse_error = 3;
inline constexpr int exit_io_error = 4;

/// Entry point shared by main() and the tests. `args` excludes the program
/// name. Results go to files or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace densewin::tools
