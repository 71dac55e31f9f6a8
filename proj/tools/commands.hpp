#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kaar::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfig = 2,
  kNumerical = 3,
  kVerification = 4,
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "KAAR_OUT_DIR";

/// Entry point of the `kaar` tool; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kaar::cli
