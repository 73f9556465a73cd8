#pragma once

#include <string>
#include <vector>

namespace ssdual {

/// Runs the command-line tool. Exit status: 0 on success, 1 on any
/// validation/usage error, 2 when `verify` finds a failing check.
int run_cli(const std::vector<std::string>& args);

}  // namespace ssdual
