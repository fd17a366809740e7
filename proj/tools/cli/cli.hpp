#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbertkit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCounterexample = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs one command. `args` excludes the program name. JSON (or the
/// requested format) goes to `out`, a one-line human summary and any
/// diagnostics to `err`; `in` backs the `-` file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace hilbertkit::cli
