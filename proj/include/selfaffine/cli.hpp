#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace selfaffine {

/// Runs the command line `args` (without the program name).  Exit codes:
/// 0 success, 1 usage, 2 domain error, 3 precision error, 4 resource error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace selfaffine
