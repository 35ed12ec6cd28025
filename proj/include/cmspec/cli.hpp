#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmspec {

// Parses and runs one command line (without the program name).  All output
// goes to the supplied streams.  Returns the process exit status: 0 on
// success / verdict true, 1 on a false verdict or a failed cross-check, 2 on
// a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmspec
