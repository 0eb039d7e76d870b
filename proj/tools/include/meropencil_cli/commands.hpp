#pragma once

#include <iosfwd>

namespace mero::cli {

/// Entry point of the command-line tool.  Returns the exit code:
/// 0 success, 1 input error, 2 hypothesis violations.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mero::cli
