#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordercalc {

/// Runs the command line given argv-style arguments (without the program
/// name). Exit codes: 0 success, 1 refuted/failed verdict, 2 usage or
/// argument error, 3 step budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordercalc
