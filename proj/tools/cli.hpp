#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace hgop::cli {

/// Exit codes of the driver.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;       // a certification or acceptance check failed
inline constexpr int kBadInput = 2;     // no theorem applies, bad specification or usage
inline constexpr int kNoConvergence = 3;

/// "1024", "2^10" or "1e3" (integral values only).
std::size_t parse_size(const std::string& text);
/// Section sizes: "2^4..2^12" (doubling), "16,32,64" or a single size.
std::vector<std::size_t> parse_sizes(const std::string& text);
/// "inf" or a number.
double parse_exponent(const std::string& text);

/// Runs the driver on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgop::cli
