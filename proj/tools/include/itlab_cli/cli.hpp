#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itlab::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_failure = 1;   // solver or construction failed, report written
    inline constexpr int exit_usage = 2;     // bad flags, unreadable or malformed input

    /// Runs the itlab command line with `args` (without the program name),
    /// writing results to `out` and diagnostics to `err`. Returns the exit
    /// code.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
