#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dipolechain::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,       ///< unknown flag / subcommand, malformed option value
  kValidation = 3,  ///< physical parameter outside the model's domain
  kSequence = 4,    ///< unreadable or malformed sequence input
  kUnstable = 5,    ///< chain has a non-positive mode at this spacing
  kOutput = 6,      ///< output file could not be written
};

/// Runs one subcommand. `args` excludes the program name. Data goes to the
/// --out file when given, otherwise to `out`; diagnostics go to `err` as a
/// single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dipolechain::cli
