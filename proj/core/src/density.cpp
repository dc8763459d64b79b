#include "eiscensus/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eiscensus {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

CompensatedSum& CompensatedSum::operator+=(const CompensatedSum& other) noexcept {
  add(other.sum_);
  add(other.carry_);
  return *this;
}

namespace {

void validate(unsigned d, std::uint64_t prime_bound) {
  if (!is_odd_prime(d)) {
    throw std::invalid_argument("degree " + std::to_string(d) + " is not an odd prime (d an odd prime)");
  }
  if (prime_bound < 2) throw std::invalid_argument("prime bound must be >= 2");
}

// (p-1)/p^{d+1}
double local_mass(double p, unsigned d) { return (1.0 - 1.0 / p) * std::pow(p, -static_cast<double>(d)); }

// 1 - e^x without cancellation.
double one_minus_exp(double x) { return -std::expm1(x); }

}  // namespace

double local_factor(unsigned d) { return 1.0 - local_mass(static_cast<double>(d), d); }

double ramified_density(unsigned d) {
  const double dd = static_cast<double>(d);
  return (dd - 1.0) / std::pow(dd, 2.0 * dd);
}

Subproducts subproducts(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve) {
  validate(d, prime_bound);
  if (sieve.limit() < prime_bound) {
    throw std::invalid_argument("subproducts: sieve limit " + std::to_string(sieve.limit()) +
                                " below prime bound " + std::to_string(prime_bound));
  }
  CompensatedSum log_q;
  CompensatedSum log_r;
  for (std::uint32_t p : sieve.primes()) {
    if (p > prime_bound) break;
    if (p == d) continue;
    const double term = std::log1p(-local_mass(static_cast<double>(p), d));
    if (p % d == 1) {
      log_q.add(term);
    } else {
      log_r.add(term);
    }
  }
  Subproducts out;
  out.log_q = log_q.value();
  out.log_r = log_r.value();
  out.prod_q = std::exp(out.log_q);
  out.prod_r = std::exp(out.log_r);
  return out;
}

double tail_bound(unsigned d, std::uint64_t prime_bound) {
  validate(d, prime_bound);
  const double dd = static_cast<double>(d);
  return 2.0 * std::pow(static_cast<double>(prime_bound), 1.0 - dd) / (dd - 1.0);
}

DensityConstants density_constants(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve) {
  const Subproducts sp = subproducts(d, prime_bound, sieve);
  const double log_local = std::log1p(-local_mass(static_cast<double>(d), d));
  const double local = std::exp(log_local);
  const double c = ramified_density(d);
  const double ramified_share = local_mass(static_cast<double>(d), d);  // (d-1)/d^{d+1}

  DensityConstants k;
  k.d = d;
  k.prime_bound = prime_bound;
  k.tail_bound = tail_bound(d, prime_bound);
  k.theta = one_minus_exp(log_local + sp.log_q + sp.log_r);
  k.alpha = local * sp.prod_r * one_minus_exp(sp.log_q);
  k.beta = c * one_minus_exp(sp.log_r);
  k.theta_star = one_minus_exp(sp.log_r) * (1.0 - c) + ramified_share * sp.prod_r;
  k.ratio = k.theta_star / k.theta;
  k.theta_star_prose = sp.prod_q * (one_minus_exp(log_local + sp.log_r) - c);
  k.ratio_prose = k.theta_star_prose / k.theta;
  return k;
}

double theta(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve) {
  return density_constants(d, prime_bound, sieve).theta;
}

double alpha(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve) {
  return density_constants(d, prime_bound, sieve).alpha;
}

double beta(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve) {
  return density_constants(d, prime_bound, sieve).beta;
}

double theta_star(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve) {
  return density_constants(d, prime_bound, sieve).theta_star;
}

double theta_star_prose(unsigned d, std::uint64_t prime_bound, const FactorSieve& sieve) {
  return density_constants(d, prime_bound, sieve).theta_star_prose;
}

}  // namespace eiscensus
