#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bncount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // suite failure or formula disagreement
inline constexpr int kExitPrecondition = 2;  // bad input / precondition violated

// Runs the bncount command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bncount::cli
