#pragma once

#include <optional>
#include <string>

namespace eiscensus {

// Exact polynomial counts. (2H+1)^d overflows 64 bits already at d = 7, H = 10^3.
__extension__ using Count = unsigned __int128;
__extension__ using SignedCount = __int128;

std::string to_string(Count value);
std::string to_string(SignedCount value);

/// a * b, or nullopt on overflow past `bound` (exclusive).
std::optional<Count> checked_mul(Count a, Count b, Count bound);

/// base^exp, or nullopt when the result would reach `bound`.
std::optional<Count> checked_pow(Count base, unsigned exp, Count bound);

/// 2^126, the largest grid size the counters accept (exclusive).
inline constexpr Count kGridSizeBound = Count{1} << 126;

}  // namespace eiscensus
