#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reflcat::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

inline constexpr int kSchemaVersion = 1;

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflcat::cli
