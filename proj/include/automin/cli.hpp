// Command line front end. run_cli takes argv-style arguments (program
// name excluded) and writes to the supplied streams so tests can drive
// it in-process. Exit codes: 0 success or equivalent, 1 not equivalent
// (equiv only), 2 usage, parse, or validation error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace automin::cli {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace automin::cli
