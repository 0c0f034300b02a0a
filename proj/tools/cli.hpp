#pragma once
// polyrep command line: opinion, fuse, run, validate.

#include <ostream>
#include <string>
#include <vector>

namespace polyrep::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,          // invalid flags or unreadable inputs
    kFusion = 3,         // dogmatic consensus, or any topic error under --strict
    kMalformedTopic = 4,
    kPlan = 5,           // plan parse error or unknown scenario
    kOracleFailed = 6,
};

// Runs one command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyrep::cli
