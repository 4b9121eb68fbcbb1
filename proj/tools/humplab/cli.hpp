#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace humplab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIdentityViolation = 1,
  kUsageError = 2,
};

/// Environment variable that overrides the default enumeration caps with a
/// single uniform cap; --max-enum-n takes precedence.
inline constexpr const char* kMaxEnumEnv = "HUMPLAB_MAX_ENUM_N";

/// Runs the humplab command line. `args` excludes the program name. Records go
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace humplab::cli
