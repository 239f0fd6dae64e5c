#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anclab::cli {

/// Runs one command line (args excludes the program name). Returns the process exit
/// code: 0 on success, 1 when a verification fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anclab::cli
