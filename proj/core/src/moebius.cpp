#include "eiscensus/moebius.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace eiscensus {

std::string_view to_string(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::AllSquarefree: return "AllSquarefree";
    case SelectorKind::AtLeastOneUnit: return "AtLeastOneUnit";
    case SelectorKind::AllUnit: return "AllUnit";
    case SelectorKind::AllNonunitCoprimeD: return "AllNonunitCoprimeD";
    case SelectorKind::AllNonunitAllowD: return "AllNonunitAllowD";
  }
  return "?";
}

namespace {

void require_squarefree(std::uint64_t s, const FactorSieve& sieve, const char* what) {
  if (s < 1) throw std::invalid_argument(std::string(what) + ": s must be >= 1");
  if (!sieve.is_squarefree(s)) {
    throw std::invalid_argument(std::string(what) + ": s = " + std::to_string(s) + " is not squarefree");
  }
}

Count side_count(std::uint64_t height, std::uint64_t step) { return Count{2} * (height / step) + 1; }

}  // namespace

bool selector_admits(SelectorKind kind, std::uint64_t s, unsigned d, const FactorSieve& sieve) {
  if (s < 1 || !sieve.is_squarefree(s)) return false;
  bool any_unit = false;
  bool any_nonunit = false;
  bool has_d = false;
  for (std::uint32_t p : sieve.prime_factors(s)) {
    if (p == d) {
      has_d = true;
      any_nonunit = true;
    } else if (p % d == 1) {
      any_unit = true;
    } else {
      any_nonunit = true;
    }
  }
  switch (kind) {
    case SelectorKind::AllSquarefree: return s >= 2;
    case SelectorKind::AtLeastOneUnit: return any_unit;
    case SelectorKind::AllUnit: return s >= 2 && !any_nonunit;
    case SelectorKind::AllNonunitCoprimeD: return s >= 2 && !any_unit && !has_d;
    case SelectorKind::AllNonunitAllowD: return s >= 2 && !any_unit;
  }
  return false;
}

Count exact_count_G(unsigned d, std::uint64_t s, std::uint64_t height, const FactorSieve& sieve) {
  checked_grid_size(d, height);
  require_squarefree(s, sieve, "exact_count_G");
  if (s > height) return 0;
  const std::uint64_t k = height / s;
  Count n = coprime_count(s, k, sieve);
  const Count side = side_count(height, s);
  for (unsigned i = 1; i < d; ++i) n *= side;
  return n;
}

Count exact_count_Gprime(unsigned d, std::uint64_t s, std::uint64_t height, const FactorSieve& sieve) {
  checked_grid_size(d, height);
  require_squarefree(s, sieve, "exact_count_Gprime");
  if (std::gcd(s, std::uint64_t{d}) != 1) {
    throw std::invalid_argument("exact_count_Gprime: gcd(s, d) must be 1 (s = " + std::to_string(s) + ")");
  }
  const std::uint64_t ds = std::uint64_t{d} * s;
  if (ds > height) return 0;

  const std::uint64_t d2 = std::uint64_t{d} * d;
  const std::uint64_t d2s = d2 * s;
  Count middle = 1;
  const Count middle_side = side_count(height, d2s);
  for (unsigned i = 1; i + 1 < d; ++i) middle *= middle_side;

  // a_{d-1} must satisfy a_{d-1} ≡ -a_0 (mod d²) and s | a_{d-1}. Writing
  // a_{d-1} = s·t gives t ≡ -a_0·s⁻¹ (mod d²), so r = s·t is the CRT residue.
  const auto d2i = static_cast<std::int64_t>(d2);
  std::int64_t s_inv = 1;
  const auto s_mod = static_cast<std::int64_t>(s % d2);
  for (std::int64_t x = 1; x < d2i; ++x) {
    if ((s_mod * x) % d2i == 1) {
      s_inv = x;
      break;
    }
  }

  const auto h = static_cast<std::int64_t>(height);
  const auto kmax = static_cast<std::int64_t>(height / ds);
  const auto dsi = static_cast<std::int64_t>(ds);
  const auto si = static_cast<std::int64_t>(s);
  Count lead_total = 0;
  for (std::int64_t k = -kmax; k <= kmax; ++k) {
    if (k == 0) continue;
    const std::uint64_t k_abs = static_cast<std::uint64_t>(k < 0 ? -k : k);
    if (std::gcd(k_abs, ds) != 1) continue;
    const std::int64_t a0 = k * dsi;
    const std::int64_t t = (((-a0) % d2i + d2i) % d2i) * s_inv % d2i;
    const std::int64_t r = si * t;
    lead_total += count_in_class(-h, h, d2s, r);
  }
  return middle * lead_total;
}

SignedCount mobius_sum(unsigned d, std::uint64_t height, SelectorKind selector, Family family,
                       const FactorSieve& sieve) {
  checked_grid_size(d, height);
  if (sieve.limit() < height) {
    throw std::invalid_argument("mobius_sum: sieve limit " + std::to_string(sieve.limit()) +
                                " below height " + std::to_string(height));
  }
  if (family == Family::Gprime && selector != SelectorKind::AllUnit &&
      selector != SelectorKind::AllNonunitCoprimeD) {
    throw std::invalid_argument("mobius_sum: selector " + std::string(to_string(selector)) +
                                " admits moduli divisible by d, which G' does not accept");
  }
  SignedCount sum = 0;
  for (std::uint64_t s = 2; s <= height; ++s) {
    if (!selector_admits(selector, s, d, sieve)) continue;
    const int mu = mobius(s, sieve);
    const Count term = family == Family::G ? exact_count_G(d, s, height, sieve)
                                           : exact_count_Gprime(d, s, height, sieve);
    if (mu > 0) {
      sum -= static_cast<SignedCount>(term);
    } else {
      sum += static_cast<SignedCount>(term);
    }
  }
  return sum;
}

CensusTally exact_set_counts(unsigned d, std::uint64_t height, const FactorSieve& sieve) {
  CensusTally tally;
  tally.d = d;
  tally.height = height;
  tally.total = checked_grid_size(d, height);

  auto as_count = [](SignedCount v) {
    if (v < 0) throw std::logic_error("exact_set_counts: negative Möbius sum");
    return static_cast<Count>(v);
  };
  tally.count_E = as_count(mobius_sum(d, height, SelectorKind::AllSquarefree, Family::G, sieve));
  tally.count_E1_prose = as_count(mobius_sum(d, height, SelectorKind::AllUnit, Family::G, sieve));
  tally.count_A = as_count(mobius_sum(d, height, SelectorKind::AtLeastOneUnit, Family::G, sieve));
  tally.count_B = as_count(mobius_sum(d, height, SelectorKind::AllNonunitCoprimeD, Family::Gprime, sieve));
  const Count ramified = exact_count_Gprime(d, 1, height, sieve);
  tally.count_E2_prose =
      as_count(static_cast<SignedCount>(ramified) -
               mobius_sum(d, height, SelectorKind::AllUnit, Family::Gprime, sieve));
  tally.count_star = tally.count_E - tally.count_E1_prose - tally.count_E2_prose;
  return tally;
}

}  // namespace eiscensus
