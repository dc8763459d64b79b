#include "eiscensus/arith.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eiscensus {

FactorSieve::FactorSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) {
    throw std::invalid_argument("FactorSieve: limit must be >= 2, got " + std::to_string(limit));
  }
  if (limit > kMaxLimit) {
    throw std::invalid_argument("FactorSieve: limit " + std::to_string(limit) +
                                " exceeds the supported maximum " + std::to_string(kMaxLimit));
  }
  // Linear sieve: every composite is crossed out once, by its smallest prime.
  spf_.assign(limit + 1, 0);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (spf_[n] == 0) {
      spf_[n] = static_cast<std::uint32_t>(n);
      primes_.push_back(static_cast<std::uint32_t>(n));
    }
    const std::uint32_t f = spf_[n];
    for (std::uint32_t p : primes_) {
      if (p > f || std::uint64_t{p} * n > limit) break;
      spf_[p * n] = p;
    }
  }
}

void FactorSieve::check_range(std::uint64_t n) const {
  if (n < 1 || n > limit_) {
    throw std::invalid_argument("FactorSieve: argument " + std::to_string(n) +
                                " outside [1, " + std::to_string(limit_) + "]");
  }
}

std::uint32_t FactorSieve::smallest_factor(std::uint64_t n) const {
  check_range(n);
  if (n < 2) throw std::invalid_argument("FactorSieve: 1 has no prime factor");
  return spf_[n];
}

bool FactorSieve::is_prime(std::uint64_t n) const {
  if (n < 2) return false;
  check_range(n);
  return spf_[n] == n;
}

std::vector<std::uint32_t> FactorSieve::prime_factors(std::uint64_t n) const {
  check_range(n);
  std::vector<std::uint32_t> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

std::uint64_t FactorSieve::radical(std::uint64_t n) const {
  std::uint64_t r = 1;
  for (std::uint32_t p : prime_factors(n)) r *= p;
  return r;
}

bool FactorSieve::is_squarefree(std::uint64_t n) const {
  check_range(n);
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

FactorSieve build_factor_sieve(std::uint64_t limit) { return FactorSieve(limit); }

int mobius(std::uint64_t n, const FactorSieve& sieve) {
  if (!sieve.is_squarefree(n)) return 0;
  return sieve.prime_factors(n).size() % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n, const FactorSieve& sieve) {
  std::uint64_t phi = n;
  for (std::uint32_t p : sieve.prime_factors(n)) phi = phi / p * (p - 1);
  return phi;
}

unsigned omega(std::uint64_t n, const FactorSieve& sieve) {
  return static_cast<unsigned>(sieve.prime_factors(n).size());
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k <= n / k; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

bool is_odd_prime(std::uint64_t n) { return n != 2 && is_prime(n); }

std::string_view to_string(ResidueClass rc) {
  switch (rc) {
    case ResidueClass::EqualsD: return "EqualsD";
    case ResidueClass::OneModD: return "OneModD";
    case ResidueClass::OtherModD: return "OtherModD";
  }
  return "?";
}

ResidueClass residue_class(std::uint64_t p, std::uint64_t d) {
  if (!is_prime(p)) throw std::invalid_argument("residue_class: p = " + std::to_string(p) + " is not prime");
  if (!is_odd_prime(d)) {
    throw std::invalid_argument("residue_class: d = " + std::to_string(d) + " is not an odd prime");
  }
  if (p == d) return ResidueClass::EqualsD;
  return p % d == 1 ? ResidueClass::OneModD : ResidueClass::OtherModD;
}

namespace {

std::uint64_t coprime_count_from_primes(std::span<const std::uint64_t> primes, std::uint64_t m) {
  // Sum over squarefree e | rad(s) of mu(e) * #{multiples of e in [-m, m]}.
  const std::size_t k = primes.size();
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::uint64_t e = 1;
    bool too_big = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        e *= primes[i];
        if (e > m) {
          too_big = true;
          break;
        }
      }
    }
    // Only a = 0 is a multiple of e > m; it contributes 1.
    const std::int64_t multiples = too_big ? 1 : static_cast<std::int64_t>(2 * (m / e) + 1);
    total += (std::popcount(mask) % 2 == 0) ? multiples : -multiples;
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace

std::uint64_t coprime_count(std::uint64_t s, std::uint64_t m, const FactorSieve& sieve) {
  if (s < 1) throw std::invalid_argument("coprime_count: s must be >= 1");
  const auto factors = sieve.prime_factors(s);
  std::vector<std::uint64_t> primes(factors.begin(), factors.end());
  return coprime_count_from_primes(primes, m);
}

std::uint64_t coprime_count(std::uint64_t s, std::uint64_t m) {
  if (s < 1) throw std::invalid_argument("coprime_count: s must be >= 1");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= s / p; ++p) {
    if (s % p == 0) {
      primes.push_back(p);
      while (s % p == 0) s /= p;
    }
  }
  if (s > 1) primes.push_back(s);
  return coprime_count_from_primes(primes, m);
}

std::uint64_t count_in_class(std::int64_t lo, std::int64_t hi, std::uint64_t m, std::int64_t r) {
  if (m < 1) throw std::invalid_argument("count_in_class: modulus must be >= 1");
  if (lo > hi) return 0;
  const auto mod = static_cast<std::int64_t>(m);
  // #{k : lo <= r + k m <= hi}
  const std::int64_t kmax = floor_div(hi - r, mod);
  const std::int64_t kmin = -floor_div(r - lo, mod);
  return kmax >= kmin ? static_cast<std::uint64_t>(kmax - kmin + 1) : 0;
}

}  // namespace eiscensus
