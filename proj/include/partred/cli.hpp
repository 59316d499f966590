#ifndef PARTRED_CLI_HPP
#define PARTRED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace partred {

/// Runs the command line given argv-style arguments (without the program
/// name). Structured output goes to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
/// failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace partred

#endif
