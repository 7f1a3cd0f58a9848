#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace graphent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the graphent executable. `args` excludes the program
/// name. Reports go to `out` (or --out), diagnostics and timing to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace graphent::cli
