#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flowloop::cli {

/// Runs one command; args excludes the program name.  Returns 0 on success,
/// 1 on an input error, 2 when a verification or internal check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowloop::cli
