#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperwalk::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Best rational approximation p/q with q <= max_den, rendered "p/q" (or "p").
std::string to_fraction(double x, long max_den = 10000);

}  // namespace hyperwalk::cli
