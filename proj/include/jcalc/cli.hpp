#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcalc::cli {

// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jcalc::cli
