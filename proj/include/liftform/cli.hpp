#pragma once

#include <string>
#include <vector>

namespace liftform::cli {

// Exit codes: 0 success, 1 analysis-domain error, 2 usage error.
int run(int argc, const char* const* argv);

// Convenience for tests; `args` excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace liftform::cli
