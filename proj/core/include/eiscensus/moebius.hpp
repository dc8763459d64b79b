#pragma once

#include <cstdint>
#include <string_view>

#include "eiscensus/arith.hpp"
#include "eiscensus/census.hpp"
#include "eiscensus/int128.hpp"

namespace eiscensus {

/// Which squarefree moduli s a Möbius sum ranges over. "Unit" primes are the
/// p ≡ 1 (mod d).
enum class SelectorKind {
  AllSquarefree,       // every squarefree s >= 2
  AtLeastOneUnit,      // some prime factor ≡ 1 (mod d)
  AllUnit,             // s >= 2, every prime factor ≡ 1 (mod d)
  AllNonunitCoprimeD,  // s >= 2, gcd(s, d) = 1, no prime factor ≡ 1 (mod d)
  AllNonunitAllowD,    // s >= 2, no prime factor ≡ 1 (mod d); d may divide s
};

enum class Family { G, Gprime };

std::string_view to_string(SelectorKind kind);

/// Membership from the factorization of s; false for non-squarefree s.
bool selector_admits(SelectorKind kind, std::uint64_t s, unsigned d, const FactorSieve& sieve);

/// |G_d(s, H)| = (2⌊H/s⌋+1)^{d-1} · coprime_count(s, ⌊H/s⌋). s squarefree.
Count exact_count_G(unsigned d, std::uint64_t s, std::uint64_t height, const FactorSieve& sieve);

/// |G'_d(s, H)| for squarefree s coprime to d.
///
/// a_1..a_{d-2} are multiples of d²s; a_0 = k·d·s with gcd(k, ds) = 1; for
/// each a_0 the admissible a_{d-1} form one residue class mod d²s.
Count exact_count_Gprime(unsigned d, std::uint64_t s, std::uint64_t height, const FactorSieve& sieve);

/// −Σ μ(s)·|F(s, H)| over selector-admitted s in [2, H].
///
/// Family::Gprime only pairs with AllUnit and AllNonunitCoprimeD, whose
/// members are coprime to d.
SignedCount mobius_sum(unsigned d, std::uint64_t height, SelectorKind selector, Family family,
                       const FactorSieve& sieve);

/// Every CensusTally field from exact Möbius sums; no enumeration of the grid.
/// Requires sieve.limit() >= H and (2H+1)^d < 2^126.
CensusTally exact_set_counts(unsigned d, std::uint64_t height, const FactorSieve& sieve);

}  // namespace eiscensus
