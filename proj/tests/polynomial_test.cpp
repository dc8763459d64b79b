#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "eiscensus/polynomial.hpp"

namespace eiscensus {
namespace {

MonicPoly cubic(std::int64_t a0, std::int64_t a1, std::int64_t a2) { return MonicPoly(3, {a0, a1, a2}); }

// Every coefficient vector of degree d and height <= h.
template <class Fn>
void for_each_poly(unsigned d, std::int64_t h, Fn&& fn) {
  std::vector<std::int64_t> a(d, -h);
  while (true) {
    fn(MonicPoly(d, a));
    unsigned i = 0;
    for (; i < d; ++i) {
      if (a[i] < h) {
        ++a[i];
        break;
      }
      a[i] = -h;
    }
    if (i == d) return;
  }
}

TEST(MonicPoly, RejectsBadDegreeOrShape) {
  EXPECT_THROW(MonicPoly(2, {1, 1}), std::invalid_argument);
  EXPECT_THROW(MonicPoly(9, std::vector<std::int64_t>(9, 0)), std::invalid_argument);
  EXPECT_THROW(MonicPoly(3, {1, 2}), std::invalid_argument);
}

TEST(MonicPoly, HeightAndRendering) {
  const MonicPoly f = cubic(2, 2, 2);
  EXPECT_EQ(f.height(), 2u);
  EXPECT_EQ(f.to_string(), "x^3 + 2x^2 + 2x + 2");
  EXPECT_EQ(f.to_list(), "[2, 2, 2]");
  EXPECT_EQ(cubic(-6, 9, -3).height(), 9u);
  EXPECT_EQ(cubic(-1, 0, 1).to_string(), "x^3 + x^2 - 1");
  EXPECT_EQ(cubic(0, 0, 0).to_string(), "x^3");
  EXPECT_EQ(MonicPoly::from_list("[6, 9, 3]"), cubic(6, 9, 3));
  EXPECT_EQ(MonicPoly::from_list(" [ -1 ,2,0,0,5 ] ").degree(), 5u);
  EXPECT_THROW(MonicPoly::from_list("[1, x, 2]"), std::invalid_argument);
  EXPECT_THROW(MonicPoly::from_list("1, 2, 3"), std::invalid_argument);
}

TEST(Eisenstein, Examples) {
  EXPECT_TRUE(is_eisenstein_at(cubic(2, 2, 2), 2));
  EXPECT_FALSE(is_eisenstein_at(cubic(4, 2, 2), 2));
  EXPECT_FALSE(is_eisenstein_at(cubic(0, 0, 0), 2));
  EXPECT_THROW(is_eisenstein_at(cubic(2, 2, 2), 4), std::invalid_argument);
}

TEST(Eisenstein, AgreesWithDirectDivisibilityOnSmallGrid) {
  for_each_poly(3, 10, [](const MonicPoly& f) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      bool all = true;
      for (std::int64_t a : f.coeffs()) all = all && a % p == 0;
      const std::int64_t a0 = f.coeff(0);
      const bool expected = all && a0 % (p * p) != 0;
      ASSERT_EQ(is_eisenstein_at(f, p), expected) << f.to_list() << " p=" << p;
    }
  });
}

TEST(Profile, Examples) {
  const FactorSieve sieve(100);
  const auto p1 = eisenstein_profile(cubic(2, 2, 2), sieve);
  EXPECT_EQ(p1.primes, (std::vector<std::uint64_t>{2}));
  EXPECT_TRUE(p1.u_part.empty());
  EXPECT_FALSE(p1.has_d);
  EXPECT_EQ(p1.v_part, (std::vector<std::uint64_t>{2}));

  const auto p2 = eisenstein_profile(cubic(7, 7, 7), sieve);
  EXPECT_EQ(p2.primes, (std::vector<std::uint64_t>{7}));
  EXPECT_EQ(p2.u_part, (std::vector<std::uint64_t>{7}));

  const auto p3 = eisenstein_profile(cubic(6, 9, 3), sieve);
  EXPECT_EQ(p3.primes, (std::vector<std::uint64_t>{3}));
  EXPECT_TRUE(p3.has_d);
  EXPECT_TRUE(p3.congruence);
}

TEST(Profile, SieveTooSmall) {
  const FactorSieve sieve(10);
  EXPECT_THROW(eisenstein_profile(cubic(22, 11, 0), sieve), std::invalid_argument);
  EXPECT_THROW(classify(cubic(22, 11, 0), sieve), std::invalid_argument);
}

TEST(Profile, InvariantsOnSmallGrids) {
  const FactorSieve sieve(100);
  for (unsigned d : {3u, 5u}) {
    for_each_poly(d, d == 3 ? 12 : 4, [&](const MonicPoly& f) {
      const auto prof = eisenstein_profile(f, sieve);
      std::set<std::uint64_t> expected;
      for (std::uint64_t p = 2; p <= f.height(); ++p) {
        if (is_prime(p) && is_eisenstein_at(f, p)) expected.insert(p);
      }
      ASSERT_EQ(std::set<std::uint64_t>(prof.primes.begin(), prof.primes.end()), expected) << f.to_list();

      std::set<std::uint64_t> joined(prof.u_part.begin(), prof.u_part.end());
      joined.insert(prof.v_part.begin(), prof.v_part.end());
      if (prof.has_d) joined.insert(d);
      ASSERT_EQ(joined.size(), prof.u_part.size() + prof.v_part.size() + (prof.has_d ? 1 : 0));
      ASSERT_EQ(joined, expected);

      std::uint64_t product = 1;
      const std::int64_t a0 = f.coeff(0);
      for (std::uint64_t p : prof.primes) {
        ASSERT_NE(a0, 0);
        ASSERT_EQ(a0 % static_cast<std::int64_t>(p), 0);
        ASSERT_LE(p, f.height());
        product *= p;
      }
      if (!prof.primes.empty()) ASSERT_LE(product, static_cast<std::uint64_t>(a0 < 0 ? -a0 : a0));
    });
  }
}

TEST(GenusCongruence, Examples) {
  EXPECT_TRUE(genus_congruence(cubic(6, 9, 3)));
  EXPECT_TRUE(genus_congruence(cubic(0, 0, 0)));
  EXPECT_FALSE(genus_congruence(cubic(3, 9, 3)));
  // d = 5: a_1, a_2, a_3 ≡ 0 and a_0 + a_4 ≡ 0 (mod 25).
  EXPECT_TRUE(genus_congruence(MonicPoly(5, {5, 25, -50, 0, 20})));
  EXPECT_FALSE(genus_congruence(MonicPoly(5, {5, 25, -50, 5, 20})));
}

TEST(Classify, Examples) {
  const FactorSieve sieve(100);
  EXPECT_EQ(classify(cubic(2, 2, 2), sieve), Classification::Star);
  EXPECT_EQ(classify(cubic(7, 7, 7), sieve), Classification::FailByOneModD);
  EXPECT_EQ(classify(cubic(6, 9, 3), sieve), Classification::FailByRamifiedD);
  EXPECT_EQ(classify(cubic(0, 0, 0), sieve), Classification::NotEisenstein);
  // 3-Eisenstein without the congruence keeps (★).
  EXPECT_EQ(classify(cubic(3, 0, 3), sieve), Classification::Star);
  // Eisenstein at 7 and 2: the ≡ 1 prime wins.
  EXPECT_EQ(classify(cubic(14, 14, 0), sieve), Classification::FailByOneModD);
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror(cubic(2, 2, 2)), cubic(-2, 2, -2));
  EXPECT_EQ(mirror(cubic(6, 9, 3)), cubic(-6, 9, -3));
  EXPECT_EQ(mirror(cubic(-2, 2, -2)).to_string(), "x^3 + 2x^2 + 2x + 2");
}

TEST(Classify, PartitionAndMirrorInvariance) {
  const FactorSieve sieve(100);
  for (unsigned d : {3u, 5u}) {
    for_each_poly(d, d == 3 ? 12 : 4, [&](const MonicPoly& f) {
      const MonicPoly g = mirror(f);
      ASSERT_EQ(mirror(g), f);
      ASSERT_EQ(g.height(), f.height());
      const Classification c = classify(f, sieve);
      ASSERT_EQ(classify(g, sieve), c) << f.to_list();
      const bool eisenstein = !eisenstein_profile(f, sieve).primes.empty();
      ASSERT_EQ(c != Classification::NotEisenstein, eisenstein);

      // Direct reading of the definition, independent of classify_flags.
      const auto prof = eisenstein_profile(f, sieve);
      const bool fails = !prof.u_part.empty() || (prof.has_d && genus_congruence(f));
      if (!eisenstein) {
        ASSERT_EQ(c, Classification::NotEisenstein);
      } else if (!fails) {
        ASSERT_EQ(c, Classification::Star);
      } else if (!prof.u_part.empty()) {
        ASSERT_EQ(c, Classification::FailByOneModD);
      } else {
        ASSERT_EQ(c, Classification::FailByRamifiedD);
      }
    });
  }
}

}  // namespace
}  // namespace eiscensus
