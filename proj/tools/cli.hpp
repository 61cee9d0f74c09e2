#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wis::cli {

/// Runs the wiscount command line (args excludes the program name).
/// Returns 0 on success, 1 on a domain error (no strong ordering, budget
/// exhausted, nonpositive weight), 2 on usage, file or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wis::cli
