#include "eiscensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "eiscensus/errors.hpp"
#include "eiscensus/polynomial.hpp"

namespace eiscensus {

CensusTally& CensusTally::operator+=(const CensusTally& other) {
  count_E += other.count_E;
  count_E1_prose += other.count_E1_prose;
  count_E2_prose += other.count_E2_prose;
  count_A += other.count_A;
  count_B += other.count_B;
  count_star += other.count_star;
  return *this;
}

Count checked_grid_size(unsigned d, std::uint64_t height) {
  if (!is_odd_prime(d)) {
    throw std::invalid_argument("degree " + std::to_string(d) + " is not an odd prime (d an odd prime)");
  }
  if (height < 1) throw std::invalid_argument("height must be >= 1");
  if (height > (std::uint64_t{1} << 62)) throw std::invalid_argument("height too large");
  auto size = checked_pow(Count{2} * height + 1, d, kGridSizeBound);
  if (!size) {
    throw std::invalid_argument("(2H+1)^d must be below 2^126 (d = " + std::to_string(d) +
                                ", H = " + std::to_string(height) + ")");
  }
  return *size;
}

Count CoefficientRange::size(unsigned d, std::uint64_t height) const {
  if (lead_hi < lead_lo) return 0;
  Count width = static_cast<Count>(lead_hi - lead_lo + 1);
  const Count side = Count{2} * height + 1;
  for (unsigned i = 1; i < d; ++i) width *= side;
  return width;
}

std::vector<CoefficientRange> partition_space(unsigned d, std::uint64_t height, unsigned parts) {
  checked_grid_size(d, height);
  if (parts < 1) throw std::invalid_argument("partition_space: parts must be >= 1");
  const std::uint64_t values = 2 * height + 1;
  const std::uint64_t n = std::min<std::uint64_t>(parts, values);
  std::vector<CoefficientRange> out;
  out.reserve(n);
  const auto lo = -static_cast<std::int64_t>(height);
  std::uint64_t start = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t width = values / n + (i < values % n ? 1 : 0);
    out.push_back({lo + static_cast<std::int64_t>(start),
                   lo + static_cast<std::int64_t>(start + width) - 1});
    start += width;
  }
  return out;
}

namespace {

std::uint64_t abs_u(std::int64_t v) {
  return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

void require_sieve(const FactorSieve& sieve, std::uint64_t height) {
  if (sieve.limit() < height) {
    throw std::invalid_argument("sieve limit " + std::to_string(sieve.limit()) + " below height " +
                                std::to_string(height));
  }
}

// Calls fn(coeffs) for every vector with coeffs[i] drawn from choices[i].
template <class Fn>
void for_each_vector(const std::vector<std::vector<std::int64_t>>& choices, Fn&& fn) {
  const std::size_t n = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::int64_t> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = choices[i][0];
  while (true) {
    fn(std::as_const(coeffs));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < choices[i].size()) {
        coeffs[i] = choices[i][idx[i]];
        break;
      }
      idx[i] = 0;
      coeffs[i] = choices[i][0];
    }
    if (i == n) return;
  }
}

std::vector<std::int64_t> multiples_in_box(std::uint64_t step, std::uint64_t height) {
  std::vector<std::int64_t> out;
  const auto k = static_cast<std::int64_t>(height / step);
  const auto m = static_cast<std::int64_t>(step);
  for (std::int64_t j = -k; j <= k; ++j) out.push_back(j * m);
  return out;
}

}  // namespace

CensusTally tally_range(unsigned d, std::uint64_t height, const CoefficientRange& range,
                        const FactorSieve& sieve) {
  CensusTally tally;
  tally.d = d;
  tally.height = height;
  tally.total = checked_grid_size(d, height);
  require_sieve(sieve, height);

  const auto h = static_cast<std::int64_t>(height);
  const auto dd = static_cast<std::int64_t>(d) * static_cast<std::int64_t>(d);
  if (range.lead_lo < -h || range.lead_hi > h) {
    throw std::invalid_argument("tally_range: leading strip outside [-H, H]");
  }
  if (range.lead_hi < range.lead_lo) return tally;

  // Odometer over a_1 .. a_{d-1}; a_0 is swept in the inner loop.
  std::vector<std::int64_t> a(d, 0);
  for (unsigned i = 1; i + 1 < d; ++i) a[i] = -h;
  a[d - 1] = range.lead_lo;

  while (true) {
    std::uint64_t g_hi = 0;
    bool middle_ok = true;
    for (unsigned i = 1; i < d; ++i) {
      g_hi = std::gcd(g_hi, abs_u(a[i]));
      if (i + 1 < d && a[i] % dd != 0) middle_ok = false;
    }
    if (g_hi != 1) {
      const std::int64_t lead = a[d - 1];
      for (std::int64_t a0 = -h; a0 <= h; ++a0) {
        if (a0 == 0) continue;
        const std::uint64_t g = std::gcd(g_hi, abs_u(a0));
        if (g < 2) continue;
        const EisensteinFlags flags = eisenstein_flags(g, a0, d, sieve);
        if (!flags.any) continue;
        const bool congruence = middle_ok && (a0 + lead) % dd == 0;
        ++tally.count_E;
        switch (classify_flags(flags, congruence)) {
          case Classification::FailByOneModD: ++tally.count_E1_prose; break;
          case Classification::FailByRamifiedD: ++tally.count_E2_prose; break;
          case Classification::Star: ++tally.count_star; break;
          case Classification::NotEisenstein: break;
        }
        if (flags.one_mod_d && !flags.has_d && !flags.other) ++tally.count_A;
        if (flags.has_d && congruence && flags.other) ++tally.count_B;
      }
    }

    unsigned i = 1;
    for (; i < d; ++i) {
      const std::int64_t top = (i == d - 1) ? range.lead_hi : h;
      const std::int64_t bottom = (i == d - 1) ? range.lead_lo : -h;
      if (a[i] < top) {
        ++a[i];
        break;
      }
      a[i] = bottom;
    }
    if (i == d) break;
  }
  return tally;
}

CensusTally enumerate_census(unsigned d, std::uint64_t height, const FactorSieve& sieve,
                             const CensusOptions& options) {
  const Count total = checked_grid_size(d, height);
  if (total > options.budget) {
    throw ResourceLimitError("census of " + to_string(total) + " polynomials exceeds the budget cap " +
                             to_string(options.budget) + " (raise --budget or EISCENSUS_BUDGET)");
  }
  if (options.workers < 1) throw std::invalid_argument("enumerate_census: workers must be >= 1");
  require_sieve(sieve, height);

  const unsigned workers = options.workers;
  const auto strips = partition_space(d, height, workers == 1 ? 1 : workers * 4);
  std::vector<CensusTally> partial(strips.size());

  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t k = next.fetch_add(1); k < strips.size(); k = next.fetch_add(1)) {
      partial[k] = tally_range(d, height, strips[k], sieve);
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(workers, strips.size()));
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  }

  CensusTally tally;
  tally.d = d;
  tally.height = height;
  tally.total = total;
  for (const auto& p : partial) tally += p;
  return tally;
}

Count brute_count_G(unsigned d, std::uint64_t s, std::uint64_t height, const FactorSieve& sieve) {
  checked_grid_size(d, height);
  require_sieve(sieve, height);
  if (s < 1) throw std::invalid_argument("brute_count_G: s must be >= 1");
  const std::vector<std::vector<std::int64_t>> choices(d, multiples_in_box(s, height));
  const auto ss = static_cast<std::int64_t>(s);
  Count n = 0;
  for_each_vector(choices, [&](const std::vector<std::int64_t>& a) {
    if (std::gcd(abs_u(a[0] / ss), s) == 1) ++n;
  });
  return n;
}

Count brute_count_Gprime(unsigned d, std::uint64_t s, std::uint64_t height, const FactorSieve& sieve) {
  checked_grid_size(d, height);
  require_sieve(sieve, height);
  if (s < 1) throw std::invalid_argument("brute_count_Gprime: s must be >= 1");
  if (std::gcd(s, std::uint64_t{d}) != 1) {
    throw std::invalid_argument("brute_count_Gprime: gcd(s, d) must be 1 (s = " + std::to_string(s) + ")");
  }
  const std::vector<std::vector<std::int64_t>> choices(d, multiples_in_box(s, height));
  const auto ss = static_cast<std::int64_t>(s);
  const auto dd = static_cast<std::int64_t>(d);
  Count n = 0;
  for_each_vector(choices, [&](const std::vector<std::int64_t>& a) {
    if (std::gcd(abs_u(a[0] / ss), s) != 1) return;
    for (std::int64_t c : a) {
      if (c % dd != 0) return;
    }
    if (a[0] == 0 || (a[0] / dd) % dd == 0) return;
    if (!genus_congruence(a, d)) return;
    ++n;
  });
  return n;
}

}  // namespace eiscensus
