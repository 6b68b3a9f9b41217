#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itree {

// Full command-line entry point, stream-injected for tests. Exit codes:
// 0 success, 1 verification failure, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace itree
