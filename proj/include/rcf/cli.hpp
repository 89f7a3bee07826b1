#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcf {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

/// Runs one `rcf` invocation. `args` excludes the program name. Normal output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcf
