#pragma once

#include <ostream>

namespace cocharlab {

// Full command-line surface. Exit codes: 0 success, 2 precondition
// violation, 3 internal NotACharacter, 64 invalid flags.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace cocharlab
