#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinorlab::cli {

enum ExitCode : int { Ok = 0, VerificationFailure = 1, InputError = 2 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinorlab::cli
