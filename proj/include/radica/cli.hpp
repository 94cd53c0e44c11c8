#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace radica {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitDegree = 3,
  kExitBackend = 4,
  kExitVerification = 5,
};

/// Runs the front end on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Randomized invariant corpus behind `radica selftest`; one line per check.
bool run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace radica
