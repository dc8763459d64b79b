#include "eiscensus/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eiscensus {

namespace {

std::uint64_t abs_u(std::int64_t v) {
  return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

std::uint64_t coefficient_gcd(std::span<const std::int64_t> coeffs) {
  std::uint64_t g = 0;
  for (std::int64_t a : coeffs) g = std::gcd(g, abs_u(a));
  return g;
}

}  // namespace

MonicPoly::MonicPoly(unsigned degree, std::vector<std::int64_t> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (!is_odd_prime(degree)) {
    throw std::invalid_argument("MonicPoly: degree " + std::to_string(degree) +
                                " is not an odd prime (d an odd prime)");
  }
  if (coeffs_.size() != degree) {
    throw std::invalid_argument("MonicPoly: expected " + std::to_string(degree) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

std::uint64_t MonicPoly::height() const noexcept {
  std::uint64_t h = 0;
  for (std::int64_t a : coeffs_) h = std::max(h, abs_u(a));
  return h;
}

std::string MonicPoly::to_string() const {
  std::ostringstream os;
  os << "x^" << degree_;
  for (unsigned i = degree_; i-- > 0;) {
    const std::int64_t a = coeffs_[i];
    if (a == 0) continue;
    os << (a < 0 ? " - " : " + ");
    const std::uint64_t mag = abs_u(a);
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string MonicPoly::to_list() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

MonicPoly MonicPoly::from_list(std::string_view text) {
  std::string body(text);
  const auto open = body.find('[');
  const auto close = body.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw std::invalid_argument("MonicPoly::from_list: expected \"[a0, a1, ...]\"");
  }
  body = body.substr(open + 1, close - open - 1);
  std::vector<std::int64_t> coeffs;
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    for (std::size_t i = used; i < item.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(item[i]))) {
        throw std::invalid_argument("MonicPoly::from_list: bad coefficient '" + item + "'");
      }
    }
    coeffs.push_back(v);
  }
  const auto degree = static_cast<unsigned>(coeffs.size());
  return MonicPoly(degree, std::move(coeffs));
}

bool is_eisenstein_at(const MonicPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("is_eisenstein_at: " + std::to_string(p) + " is not prime");
  const auto mod = static_cast<std::int64_t>(p);
  for (std::int64_t a : f.coeffs()) {
    if (a % mod != 0) return false;
  }
  const std::int64_t a0 = f.coeff(0);
  if (a0 == 0) return false;
  return (a0 / mod) % mod != 0;
}

bool genus_congruence(std::span<const std::int64_t> coeffs, unsigned d) {
  const auto m = static_cast<std::int64_t>(d) * static_cast<std::int64_t>(d);
  for (unsigned i = 1; i + 1 < d; ++i) {
    if (coeffs[i] % m != 0) return false;
  }
  return (coeffs[0] + coeffs[d - 1]) % m == 0;
}

bool genus_congruence(const MonicPoly& f) { return genus_congruence(f.coeffs(), f.degree()); }

EisensteinFlags eisenstein_flags(std::uint64_t g, std::int64_t a0, unsigned d,
                                 const FactorSieve& sieve) {
  EisensteinFlags flags;
  if (a0 == 0 || g < 2) return flags;
  std::uint64_t rest = g;
  const std::uint64_t a0_abs = abs_u(a0);
  while (rest > 1) {
    const std::uint32_t p = sieve.smallest_factor(rest);
    while (rest % p == 0) rest /= p;
    if ((a0_abs / p) % p == 0) continue;
    flags.any = true;
    if (p == d) {
      flags.has_d = true;
    } else if (p % d == 1) {
      flags.one_mod_d = true;
    } else {
      flags.other = true;
    }
  }
  return flags;
}

EisensteinProfile eisenstein_profile(const MonicPoly& f, const FactorSieve& sieve) {
  if (sieve.limit() < f.height()) {
    throw std::invalid_argument("eisenstein_profile: sieve limit " + std::to_string(sieve.limit()) +
                                " below polynomial height " + std::to_string(f.height()));
  }
  EisensteinProfile profile;
  profile.congruence = genus_congruence(f);
  const std::int64_t a0 = f.coeff(0);
  if (a0 == 0) return profile;
  const std::uint64_t g = coefficient_gcd(f.coeffs());
  if (g < 2) return profile;
  const std::uint64_t d = f.degree();
  for (std::uint32_t p : sieve.prime_factors(g)) {
    if ((abs_u(a0) / p) % p == 0) continue;
    profile.primes.push_back(p);
    if (p == d) {
      profile.has_d = true;
    } else if (p % d == 1) {
      profile.u_part.push_back(p);
    } else {
      profile.v_part.push_back(p);
    }
  }
  return profile;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NotEisenstein: return "NotEisenstein";
    case Classification::Star: return "Star";
    case Classification::FailByOneModD: return "FailByOneModD";
    case Classification::FailByRamifiedD: return "FailByRamifiedD";
  }
  return "?";
}

Classification classify(const MonicPoly& f, const FactorSieve& sieve) {
  const EisensteinProfile profile = eisenstein_profile(f, sieve);
  EisensteinFlags flags;
  flags.any = !profile.primes.empty();
  flags.one_mod_d = !profile.u_part.empty();
  flags.has_d = profile.has_d;
  flags.other = !profile.v_part.empty();
  return classify_flags(flags, profile.congruence);
}

MonicPoly mirror(const MonicPoly& f) {
  std::vector<std::int64_t> out(f.coeffs().begin(), f.coeffs().end());
  const unsigned d = f.degree();
  for (unsigned i = 0; i < d; ++i) {
    if ((d - i) % 2 == 1) out[i] = -out[i];
  }
  return MonicPoly(d, std::move(out));
}

}  // namespace eiscensus
