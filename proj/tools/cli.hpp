#pragma once

#include <ostream>

namespace szego::cli {

/// Exit status: 0 when every check passes, 1 when a check fails, 2 on a parse
/// or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace szego::cli
