#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "eiscensus/census.hpp"

namespace eiscensus::cli {

// Stable exit-status contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceLimit = 3;
inline constexpr int kExitEngineMismatch = 4;

/// One-line JSON diff of the count fields that differ between the brute and
/// exact engines; empty when they agree.
std::string engine_diff(const CensusTally& brute, const CensusTally& exact);

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eiscensus::cli
