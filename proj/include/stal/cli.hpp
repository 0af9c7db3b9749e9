#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stal {

/// Command line front end. Machine output goes to `out`, diagnostics to
/// `err`. Exit codes: 0 success or satisfiable, 1 unsatisfiable or
/// inconsistent, 2 unknown, 3 bad input or usage.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace stal
