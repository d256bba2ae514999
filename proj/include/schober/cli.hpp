#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schober {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitSyntax = 2 };

/// Runs the `schober` command line; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schober
