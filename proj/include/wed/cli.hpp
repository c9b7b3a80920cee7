#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wed {

// Runs the command line `args` (args[0] is the program name).
// Exit codes: 0 success, 1 a verify run found a counterexample, 2 bad usage
// or malformed input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace wed
