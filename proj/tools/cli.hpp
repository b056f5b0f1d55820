#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3lat::cli {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kSchemaVersion = 1;

// args excludes the program name. JSON report on `out`, diagnostics on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3lat::cli
