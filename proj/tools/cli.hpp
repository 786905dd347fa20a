#pragma once

#include <ostream>
#include <span>
#include <string>

namespace sgb::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 2 bad input, 3 the system violates the solver hypotheses,
/// 1 anything else.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace sgb::cli
