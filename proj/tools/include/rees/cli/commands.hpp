#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rees::cli {

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 on invalid input or usage, 2 on internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rees::cli
