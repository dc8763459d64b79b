#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace eiscensus {

/// Smallest-prime-factor table over [2, limit].
///
/// Immutable after construction; safe to share between threads. Storage is
/// one uint32 per integer, so the practical cap is kMaxLimit (about 8 GB);
/// 10^7 takes 40 MB.
class FactorSieve {
 public:
  static constexpr std::uint64_t kMaxLimit = (std::uint64_t{1} << 31) - 1;

  explicit FactorSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  /// Smallest prime factor of n, 2 <= n <= limit.
  std::uint32_t smallest_factor(std::uint64_t n) const;

  bool is_prime(std::uint64_t n) const;

  /// Distinct prime factors of n in increasing order; empty for n = 1.
  std::vector<std::uint32_t> prime_factors(std::uint64_t n) const;

  /// Product of the distinct primes dividing n.
  std::uint64_t radical(std::uint64_t n) const;

  /// True if no square of a prime divides n.
  bool is_squarefree(std::uint64_t n) const;

  /// All primes <= limit, ascending.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

 private:
  void check_range(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

FactorSieve build_factor_sieve(std::uint64_t limit);

int mobius(std::uint64_t n, const FactorSieve& sieve);
std::uint64_t euler_phi(std::uint64_t n, const FactorSieve& sieve);
unsigned omega(std::uint64_t n, const FactorSieve& sieve);

/// Deterministic trial-division primality, for validating user input.
bool is_prime(std::uint64_t n);
bool is_odd_prime(std::uint64_t n);

enum class ResidueClass { EqualsD, OneModD, OtherModD };

std::string_view to_string(ResidueClass rc);

/// Where the prime p sits relative to the odd prime d.
ResidueClass residue_class(std::uint64_t p, std::uint64_t d);

/// #{a : |a| <= m, gcd(a, s) = 1}, with gcd(0, s) = s so a = 0 counts only
/// for s = 1. Exact, by inclusion-exclusion over the squarefree divisors of s.
std::uint64_t coprime_count(std::uint64_t s, std::uint64_t m, const FactorSieve& sieve);

/// Same, factoring s by trial division.
std::uint64_t coprime_count(std::uint64_t s, std::uint64_t m);

/// #{n in [lo, hi] : n ≡ r (mod m)}; zero when lo > hi.
std::uint64_t count_in_class(std::int64_t lo, std::int64_t hi, std::uint64_t m, std::int64_t r);

/// Floor division that rounds toward negative infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace eiscensus
