#pragma once

#include <string>
#include <vector>

namespace cgkit {

// full command-line front end; args excludes the program name.
// Returns the process exit code: 0 success, 1 algorithmic failure, 2 bad input.
int run_cli(std::vector<std::string> args);

}  // namespace cgkit
