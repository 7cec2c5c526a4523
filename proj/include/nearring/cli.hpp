#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nearring {

/// Runs one `nearring` command. `args` excludes the program name.
/// Returns 0 when the result is true or the check passes, 1 when it is false or fails,
/// and 2 for usage errors, malformed polynomials and infeasible configurations.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearring
