#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repglt {

// Full command-line front end; returns the process exit code
// (0 ok, 1 domain error, 2 usage error). Reads JSON input from an inline
// argument, a file path, or standard input; writes JSON to `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace repglt
