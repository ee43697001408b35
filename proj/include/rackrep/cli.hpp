#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rackrep::cli {

/// Runs the command line `args` (without the program name). JSON payloads go
/// to `out`, diagnostics to `err`. Returns the exit code: 0 success or true,
/// 1 false, 2 invalid input, 3 resource cap.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rackrep::cli
