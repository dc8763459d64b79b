#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eiscensus/arith.hpp"

namespace eiscensus {

/// x^d + a_{d-1} x^{d-1} + ... + a_1 x + a_0 with d an odd prime.
///
/// Only the d lower coefficients are stored, lowest degree first.
class MonicPoly {
 public:
  /// Throws std::invalid_argument unless `degree` is an odd prime and
  /// `coeffs` holds exactly `degree` entries.
  MonicPoly(unsigned degree, std::vector<std::int64_t> coeffs);

  unsigned degree() const noexcept { return degree_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::int64_t coeff(unsigned i) const { return coeffs_.at(i); }

  /// max |a_i| over the non-leading coefficients.
  std::uint64_t height() const noexcept;

  /// "x^3 + 2x^2 + 2x + 2"; zero terms are omitted.
  std::string to_string() const;

  /// "[a0, a1, ..., a_{d-1}]"
  std::string to_list() const;

  /// Parses the output of to_list(); the degree is the number of entries.
  static MonicPoly from_list(std::string_view text);

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

 private:
  unsigned degree_;
  std::vector<std::int64_t> coeffs_;
};

/// p | a_i for every i and p^2 does not divide a_0. Never true when a_0 = 0.
bool is_eisenstein_at(const MonicPoly& f, std::uint64_t p);

/// a_1 ≡ ... ≡ a_{d-2} ≡ a_0 + a_{d-1} ≡ 0 (mod d^2).
///
/// This is the lowest-degree-first indexing. The same condition is sometimes
/// written with reversed indices as a_2 ≡ ... ≡ a_{d-1} ≡ a_1 + a_d; the two
/// agree under i -> d - i. The reversed form is not accepted here.
bool genus_congruence(std::span<const std::int64_t> coeffs, unsigned d);
bool genus_congruence(const MonicPoly& f);

struct EisensteinProfile {
  std::vector<std::uint64_t> primes;  // every p with f p-Eisenstein, ascending
  std::vector<std::uint64_t> u_part;  // p ≡ 1 (mod d)
  std::vector<std::uint64_t> v_part;  // p ≢ 1 (mod d), p != d
  bool has_d = false;
  bool congruence = false;
};

/// Requires sieve.limit() >= height(f).
EisensteinProfile eisenstein_profile(const MonicPoly& f, const FactorSieve& sieve);

enum class Classification { NotEisenstein, Star, FailByOneModD, FailByRamifiedD };

std::string_view to_string(Classification c);

Classification classify(const MonicPoly& f, const FactorSieve& sieve);

/// a_i -> (-1)^{d-i} a_i, i.e. f(x) -> -f(-x).
MonicPoly mirror(const MonicPoly& f);

/// Compact summary of the Eisenstein prime set, shared by the enumerators.
struct EisensteinFlags {
  bool any = false;
  bool one_mod_d = false;  // some p ≡ 1 (mod d)
  bool has_d = false;
  bool other = false;      // some p ≢ 1 (mod d), p != d
};

/// Flags for a polynomial whose coefficient gcd is `g` and constant term is
/// `a0`. Both must be within the sieve range in absolute value.
EisensteinFlags eisenstein_flags(std::uint64_t g, std::int64_t a0, unsigned d,
                                 const FactorSieve& sieve);

/// Classification from flags and the congruence bit; single source of the
/// priority order used by classify() and the census.
constexpr Classification classify_flags(const EisensteinFlags& flags, bool congruence) {
  if (!flags.any) return Classification::NotEisenstein;
  if (flags.one_mod_d) return Classification::FailByOneModD;
  if (flags.has_d && congruence) return Classification::FailByRamifiedD;
  return Classification::Star;
}

}  // namespace eiscensus
