#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gon {

// Entry point of the `gon` tool. args[0] is the program name. Returns the
// process exit status: 0 all checks pass, 1 verification failure, 2 invalid
// input (including capacity), 3 hypothesis violation.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gon
