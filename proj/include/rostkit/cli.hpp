#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rostkit::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain or verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rostkit::cli
