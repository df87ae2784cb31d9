#pragma once

// Command-line front end. Exit codes: 0 success, 1 failed check (the witness
// is printed), 2 input error.

#include <ostream>
#include <string>
#include <vector>

namespace cubical {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubical
