#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

// Runs the command-line interface on the given arguments (without the program
// name). Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
