#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unioncolor {

/// Runs one command (color, verify, exact, partition, gen) against the
/// given streams. Exit status: 0 success, 1 invalid verification, 2 input
/// error, 3 budget exhaustion.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace unioncolor
