#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpc {

/// Command-line entry point. Exit codes: 0 success, 1 verification or
/// solve failure, 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace kpc
