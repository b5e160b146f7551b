#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsflow {

/// Runs one CLI command (args exclude the program name) and returns the exit
/// code: 0 on success/pass, 1 when a check fails or an operation rejects its
/// input, 2 when the request itself is malformed (unknown subcommand,
/// unreadable file, schema violation).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsflow
