#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bgm {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitInvalidSpec = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitNotApplicable = 4;

struct CommandOptions {
  std::size_t max_cohomology_order = 64;
  std::size_t max_rigidity_order = 128;
  std::string method = "auto";  // b0: auto | cocycle | fastpath | sylow
  std::uint64_t max_order = 32;  // verify-theorem / catalog list
  std::string cache_dir = ".bgm-cache";
  bool use_cache = true;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string json;  // serialized report (schema 1)
};

/// Runs one CLI verb with positional arguments (group specs).  All verbs are
/// implemented here so they are testable without spawning a process:
///   info, schur, b0, outc, rigid, blackburn: args = {spec}
///   isoclinic, experiment-central-product:   args = {spec1, spec2}
///   verify-theorem, catalog-list:            args = {}
/// Errors are encoded in exit_code; the JSON always carries an "error"
/// message on failure.
CommandResult run_command(const std::string& verb,
                          const std::vector<std::string>& args,
                          const CommandOptions& opts);

}  // namespace bgm
