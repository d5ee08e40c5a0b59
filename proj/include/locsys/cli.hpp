#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "locsys/local_system.hpp"

namespace locsys::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // check mismatch or internal error
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  std::string command;
  std::string arrangement;  // file path, or "b3" for the built-in deleted B3
  std::string local_system;
  Backend backend{};
  int order = 0;
  std::uint64_t budget = 20'000'000;
  std::string out;
  bool check = false;
  int verbosity = 0;
};

/// Each command writes its report to `out` and returns an exit status.
int cmd_chambers(const RunConfig& config, std::ostream& out);
int cmd_complex(const RunConfig& config, std::ostream& out);
int cmd_h1(const RunConfig& config, std::ostream& out);
int cmd_certify(const RunConfig& config, std::ostream& out);
int cmd_scan(const RunConfig& config, std::ostream& out);
int cmd_b3(const RunConfig& config, std::ostream& out);

/// Parses the command line, dispatches, and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace locsys::cli
