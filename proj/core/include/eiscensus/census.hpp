#pragma once

#include <cstdint>
#include <vector>

#include "eiscensus/arith.hpp"
#include "eiscensus/int128.hpp"

namespace eiscensus {

/// Exact counts over all monic degree-d polynomials of height <= H.
///
///   count_E         Eisenstein at one or more primes
///   count_E1_prose  some Eisenstein prime p ≡ 1 (mod d)
///   count_E2_prose  d-Eisenstein, no Eisenstein prime ≡ 1 (mod d), genus congruence
///   count_star      count_E - count_E1_prose - count_E2_prose
///   count_A         every Eisenstein prime is ≡ 1 (mod d) (so d is not one)
///   count_B         d-Eisenstein, genus congruence, and Eisenstein at some
///                   p ≢ 1 (mod d), p != d
struct CensusTally {
  unsigned d = 0;
  std::uint64_t height = 0;
  Count total = 0;
  Count count_E = 0;
  Count count_E1_prose = 0;
  Count count_E2_prose = 0;
  Count count_A = 0;
  Count count_B = 0;
  Count count_star = 0;

  /// Field-wise sum of the counts (d, height, total are kept from *this).
  CensusTally& operator+=(const CensusTally& other);
  friend bool operator==(const CensusTally&, const CensusTally&) = default;
};

/// The leading-coefficient strip lead_lo <= a_{d-1} <= lead_hi; every lower
/// coefficient ranges over [-H, H].
struct CoefficientRange {
  std::int64_t lead_lo = 0;
  std::int64_t lead_hi = 0;

  Count size(unsigned d, std::uint64_t height) const;
  friend bool operator==(const CoefficientRange&, const CoefficientRange&) = default;
};

/// Splits a_{d-1} in [-H, H] into min(parts, 2H+1) contiguous strips of
/// near-equal width, in increasing order.
std::vector<CoefficientRange> partition_space(unsigned d, std::uint64_t height, unsigned parts);

struct CensusOptions {
  /// Largest grid (2H+1)^d the enumerator will walk.
  Count budget = 1'000'000'000;
  unsigned workers = 1;
};

/// Brute-force tally of one strip. Requires sieve.limit() >= H.
CensusTally tally_range(unsigned d, std::uint64_t height, const CoefficientRange& range,
                        const FactorSieve& sieve);

/// Exhaustive census. Throws ResourceLimitError when (2H+1)^d exceeds the
/// budget and std::invalid_argument for bad d, H, or an undersized sieve.
/// The result does not depend on options.workers.
CensusTally enumerate_census(unsigned d, std::uint64_t height, const FactorSieve& sieve,
                             const CensusOptions& options = {});

/// |G_d(s, H)| by walking every coefficient vector with s | a_i and keeping
/// those with gcd(a_0/s, s) = 1.
Count brute_count_G(unsigned d, std::uint64_t s, std::uint64_t height, const FactorSieve& sieve);

/// |G'_d(s, H)|: the G_d conditions plus d-Eisenstein and the genus
/// congruence, by direct iteration. Requires gcd(s, d) = 1.
Count brute_count_Gprime(unsigned d, std::uint64_t s, std::uint64_t height, const FactorSieve& sieve);

/// Throws unless d is an odd prime, H >= 1 and (2H+1)^d < 2^126.
Count checked_grid_size(unsigned d, std::uint64_t height);

}  // namespace eiscensus
