#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schroder::cli {

// Runs the command line `args` (args[0] is the program name). Returns the
// process exit code: 0 success, 1 domain or verification failure, 2 usage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace schroder::cli
