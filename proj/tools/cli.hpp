#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcanon::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kInvarianceViolation = 2,
    kResourceExhausted = 3,
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcanon::cli
