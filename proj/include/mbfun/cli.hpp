#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mbfun {

// Runs one mbfun command (args exclude the program name).  Returns the exit
// code: 0 success, 1 mathematical or capability failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbfun
