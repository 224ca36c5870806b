#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cubealg {

struct RunConfig {
  std::string command;
  int r = 1;
  int n = 1;
  int trunc = 8;
  std::string format = "text";  // "text" or "json"
  std::uint64_t limit = 10'000'000;
  bool use_coprime_criterion = true;
  bool use_chain_criterion = true;
  std::uint64_t seed = 0;  // reproducibility seed for randomized checks
};

// Executes one command; returns 0 on success/verified, 1 on verification
// failure. Configuration problems raise exceptions mapped to exit 2 by the
// caller.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs. Exit
// codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubealg
