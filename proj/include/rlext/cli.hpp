#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rlext/serialize.hpp"

namespace rlext {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Field selection plus execution knobs shared by all subcommands.
struct RunConfig {
  int p = 0;
  int m = 1;
  std::vector<int> modulus;  // empty: canonical modulus
  std::string format = "human";
  int jobs = 0;  // 0: one worker per hardware thread
  std::int64_t budget = kDefaultBudget;
};

Json run_config_to_json(const RunConfig& c);
RunConfig run_config_from_json(const Json& j);

// Entry point behind main(): args exclude the program name. Returns kExitOk,
// kExitUsage for unusable input, kExitBudget when a computation refuses to
// exceed its budget, kExitError otherwise.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rlext
