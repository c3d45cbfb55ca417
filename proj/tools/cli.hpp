// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mwcr::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDataError = 3;
inline constexpr int kNumericFailure = 4;

/// Runs one command line (args[0] is the program name). Datasets and chains
/// written without --out go to `out`; diagnostics go to `err`. Standard
/// input is read when an input path is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(std::string_view bytes);

}  // namespace mwcr::cli
