#pragma once

#include <string>
#include <vector>

namespace flatsurf::cli {

// Entry point shared by the binary and the tests. argv-style arguments
// without the program name. Returns the process exit code: 0 success,
// 1 validation/verification failure, 2 usage error.
int run(const std::vector<std::string>& args);

}  // namespace flatsurf::cli
