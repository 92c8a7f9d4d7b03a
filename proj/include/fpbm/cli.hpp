#pragma once

#include <ostream>
#include <span>
#include <string>

namespace fpbm {

/// Runs one command line (`args` excludes the program name). Writes a single
/// document to `out` and diagnostics to `err`. Returns 0 for ok, 1 for an
/// infeasible or negative decision, 2 for usage and input errors, 3 when a
/// result failed its internal verification.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fpbm
