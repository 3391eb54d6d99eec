#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kschur::cli {

/// Exit statuses: 0 success or verification pass, 1 mathematical failure,
/// 2 usage error (bad arguments, unparsable shapes, scale guards).
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kschur::cli
