#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orehopf {

// Runs one invocation; args excludes the program name. Prints one JSON
// report to out and returns 0 (true), 1 (false) or 2 (usage or validation).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orehopf
