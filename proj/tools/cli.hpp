#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace q3roots {

/// Runs one CLI invocation (args exclude the program name) and writes JSON to
/// `out`. Returns the process exit code: 0 on success, 1 on domain/usage
/// errors, 2 on sweep verification failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace q3roots
