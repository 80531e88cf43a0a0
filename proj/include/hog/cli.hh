#ifndef HOG_CLI_HH
#define HOG_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace hog::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_usage = 1;
    inline constexpr int exit_data = 2;

    /// Runs the `hog` command line with `args` (program name excluded).
    auto run(std::vector<std::string> args, std::ostream & out, std::ostream & err) -> int;
}

#endif
