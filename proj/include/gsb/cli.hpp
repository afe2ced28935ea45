#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsb {

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_budget = 2 };

/// The `gsb` command line; args excludes the program name. A file argument
/// of `-` reads `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gsb
