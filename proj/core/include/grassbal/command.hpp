#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grassbal {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs one subcommand (predict, certify, sweep-lemmas, compute, verify).
/// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed from GB_SEED when set and parseable, else `fallback`.
unsigned long long seed_from_environment(unsigned long long fallback = 1);

}  // namespace grassbal
