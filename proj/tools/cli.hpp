#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cimprove::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;       // malformed input, invalid solution
inline constexpr int kSizeGuard = 2;   // solver refused an oversized input
inline constexpr int kDecisionNo = 3;  // valid run, achieved < r

// Runs one command. `args` excludes the program name. File arguments may
// be "-" to read `in`. Nothing is written to the real stdio streams, so
// the whole CLI can be exercised in-process.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace cimprove::cli
