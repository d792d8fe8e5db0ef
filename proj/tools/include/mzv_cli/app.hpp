#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mzv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a check fails or a
/// numerical method gives up, 2 on parse, domain or configuration errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli
