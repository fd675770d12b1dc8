#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagchow::cli {

/// Runs one command line (args excludes the program name). Exit status:
/// 0 success, 2 usage or input error, 3 resource cap, 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagchow::cli
