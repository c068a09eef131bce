#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace trop::cli {

// Runs tropctl with `args` (without the program name). Returns the exit code:
// 0 ok, 1 selftest failure, 2 invalid input, 3 failed precondition, 64 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trop::cli
