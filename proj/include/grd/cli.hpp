#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grd {

// Runs one CLI invocation. Exit codes: 0 the computation succeeded (a "false"
// verdict is data, not an error), 2 input or parse error, 3 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grd
