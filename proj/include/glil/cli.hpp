#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glil::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // bad arguments, unreadable files, malformed input
  kPrecondition = 2,   // input outside an operation's domain
  kCertification = 3,  // reduce produced a certificate that does not re-check
};

/// Environment variable that, when set to anything but "" or "0", makes
/// --seed mandatory for randomized subcommands.
inline constexpr const char* kCiEnv = "GLIL_CI";

/// Runs one subcommand. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glil::cli
