#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcd {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 evaluation error, 2 usage, parse or type error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcd
