#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radiusseq::cli {

enum ExitCode : int {
    ok = 0,
    property_failure = 1,
    usage_error = 2,
    resource_limit = 3,
};

/// Runs the command line (argv[0] is the program name) writing machine
/// output to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radiusseq::cli
