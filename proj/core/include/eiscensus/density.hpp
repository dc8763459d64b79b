#pragma once

#include <cstdint>

#include "eiscensus/arith.hpp"

namespace eiscensus {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + carry_; }
  CompensatedSum& operator+=(const CompensatedSum& other) noexcept;

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Truncated Euler products over primes p <= P, p != d, with the local
/// factor 1 - (p-1)/p^{d+1}:
///   prod_q  over p ≡ 1 (mod d)
///   prod_r  over p ≢ 1 (mod d)
/// The logs are kept so callers can form 1 - product without cancellation.
struct Subproducts {
  double log_q = 0.0;
  double log_r = 0.0;
  double prod_q = 1.0;
  double prod_r = 1.0;
};

Subproducts subproducts(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve);

/// 1 - (d-1)/d^{d+1}, the factor at p = d.
double local_factor(unsigned d);

/// (d-1)/d^{2d}: density of d-Eisenstein polynomials meeting the genus congruence.
double ramified_density(unsigned d);

double theta(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve);
double alpha(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve);
double beta(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve);

/// 1 - (d-1)/d^{2d} - (1 - (d-1)(d^{d-1}+1)/d^{2d}) · prod_r, evaluated as
/// (1 - prod_r)(1 - (d-1)/d^{2d}) + (d-1)/d^{d+1} · prod_r.
double theta_star(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve);

/// Density of E* when the excluded sets are read literally: "some Eisenstein
/// prime ≡ 1 (mod d)" and "d-Eisenstein with the congruence and no such
/// prime". Equals prod_q · (1 - (d-1)/d^{2d} - local_factor · prod_r).
double theta_star_prose(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve);

/// 2 · P^{1-d} / (d-1). Extending any of the products past P changes it by a
/// factor within exp(±tail_bound).
double tail_bound(unsigned d, std::uint64_t prime_bound);

struct DensityConstants {
  unsigned d = 0;
  std::uint64_t prime_bound = 0;
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double theta_star = 0.0;
  double ratio = 0.0;  // theta_star / theta
  double theta_star_prose = 0.0;
  double ratio_prose = 0.0;
  double tail_bound = 0.0;
};

/// All constants from one pass over the primes. Throws std::invalid_argument
/// unless d is an odd prime, P >= 2 and sieve.limit() >= P.
DensityConstants density_constants(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve);

}  // namespace eiscensus
