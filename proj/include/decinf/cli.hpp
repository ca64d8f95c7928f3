#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decinf::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,  ///< bad flags or unparsable decimal / bit text
  kDecodeError = 2,
  kSelfTestFailure = 3,
};

/// Runs one command line (args[0] is the program name). All output goes to
/// the given streams so the commands can be driven in-process.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace decinf::cli
