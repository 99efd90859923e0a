#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpd::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsage = 2,
    kResourceLimit = 3,
};

// Runs the `gpd` command line. args[0] is the program name. Results go to
// `out`, diagnostics to `err`. The default object cap is read from the
// GPD_MAX_OBJECTS environment variable when set; flags take precedence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpd::cli
