#pragma once

// Command-line front end.  Exit codes: 0 success, 1 a must-pass verification
// failed, 2 bad input, 3 resource budget exhausted, 4 inexact division.

#include <ostream>

namespace skeinlab::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skeinlab::cli
