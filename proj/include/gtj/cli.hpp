#pragma once

#include <iosfwd>

namespace gtj {

/// Full command-line entry point; returns the process exit code.
/// 0 = success, 1 = at least one identity check failed, 2 = usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gtj
