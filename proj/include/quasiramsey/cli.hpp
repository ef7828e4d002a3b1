#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasiramsey {

enum ExitCode { kExitOk = 0, kExitUnverified = 1, kExitInput = 2, kExitGuard = 3 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Subcommands: extract, verify, oracle, rstar, gen, disc,
/// experiment. Returns one of the ExitCode values.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Doubles as CSV fields: 17 significant digits.
std::string format_double(double v);

}  // namespace quasiramsey
