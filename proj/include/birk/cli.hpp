#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace birk {

/// Dispatches one CLI invocation. args holds the arguments after the program
/// name. Reports go to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success, 1 usage error, 2 parse/validation error,
/// 3 numerical failure (non-convergence, matching failure, drift).
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace birk
