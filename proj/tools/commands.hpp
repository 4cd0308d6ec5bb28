#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgl::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 a checked property failed, 2 any other error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgl::cli
