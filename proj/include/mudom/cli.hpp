#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace mudom::cli {

// One parsed invocation: subcommand in {classify, aut, decompose, mu, sample,
// interp, selftest} plus the JSON payload and shared knobs.
struct CommandRequest {
  std::string subcommand;
  nlohmann::json payload;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 1000;
  double resolution = 1e-4;
};

// Exit codes: 0 ok, 1 malformed input, 2 domain errors, 3 solver failures
// (and failed selftests).
struct CommandResult {
  int exit_code = 0;
  nlohmann::json output;
  std::string error_message;
};

CommandResult run(const CommandRequest& request);

}  // namespace mudom::cli
