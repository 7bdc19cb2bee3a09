#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singlink {

// Runs one command line (args[0] is the program name). Results go to `out`;
// failures print {"error":{"code":...,"message":...}} to `err` and return a
// non-zero status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singlink
