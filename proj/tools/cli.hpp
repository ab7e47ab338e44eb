#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibcode::cli {

// Runs the fibcodec command line; args excludes the program name.
// Exit codes: 0 success, 1 uncorrectable/validation/load failure, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fibcode::cli
