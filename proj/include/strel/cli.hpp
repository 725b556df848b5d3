#pragma once

#include <string>
#include <vector>

namespace strel::cli {

/// Runs the command line tool. Exit codes: 0 success, 1 property violation
/// under --assert-all, 2 usage/parse/schema/IO errors.
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

}  // namespace strel::cli
