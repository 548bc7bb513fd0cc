// Batch command-line front end: reduce, detect, verify, border, sat,
// roundtrip and gen subcommands.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bbd::cli {

enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitBudget = 2,
  kExitInvalidInput = 3,  // malformed file or invalid 3,4-SAT instance
  kExitError = 4,         // I/O failure, size cap, oracle limit
  kExitUsage = 64,
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t max_candidates = 1'000'000;
  double timeout_secs = 600.0;
  bool json = false;
  std::size_t gen_n = 3;
  std::size_t gen_m = 3;
};

/// args[0] is the program name. Returns the process exit code; never calls
/// std::exit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sets the log level from BBD_LOG (trace, debug, info, warn, error, off).
void configure_logging_from_env();

}  // namespace bbd::cli
