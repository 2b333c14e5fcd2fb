#ifndef GOLDOSC_TOOLS_CLI_HPP
#define GOLDOSC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace goldosc::cli {

/// Runs one command. Reports go to `out` (or the --out file), progress
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldosc::cli

#endif
