#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paucity {

// Runs one CLI invocation (arguments exclude the program name) against the
// given streams. Exit codes: 0 ok, 1 verification failure, 2 input error,
// 3 degenerate system, 4 capacity or budget, 5 method disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace paucity
