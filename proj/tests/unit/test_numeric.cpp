#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "eulerbrick/factor.hpp"
#include "eulerbrick/isqrt.hpp"

using namespace eulerbrick;

TEST(Isqrt, SpecExamples) {
  EXPECT_EQ(isqrt_exact(0), 0U);
  EXPECT_EQ(isqrt_exact(59536), 244U);  // 44^2 + 240^2
  EXPECT_FALSE(isqrt_exact(261).has_value());
}

TEST(Isqrt, FloorAroundPerfectSquares) {
  for (u64 w : {1ULL, 2ULL, 3ULL, 255ULL, 65535ULL, 4294967295ULL, 4294967296ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    const u128 sq = square(w);
    EXPECT_EQ(isqrt_floor(sq), w);
    EXPECT_EQ(isqrt_exact(sq), w);
    EXPECT_EQ(isqrt_floor(sq - 1), w - 1);
    EXPECT_FALSE(isqrt_exact(sq - 1).has_value() && w > 1);
    if (w != 0xFFFFFFFFFFFFFFFFULL) {
      EXPECT_EQ(isqrt_floor(sq + 1), w);
      EXPECT_FALSE(isqrt_exact(sq + 1).has_value() && w > 0);
    }
  }
}

TEST(Isqrt, MaximumInput) {
  const u128 max = ~static_cast<u128>(0);
  EXPECT_EQ(isqrt_floor(max), 0xFFFFFFFFFFFFFFFFULL);
  EXPECT_FALSE(isqrt_exact(max).has_value());
}

TEST(Isqrt, MatchesBisectionOnRandomValues) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const u64 v = rng() >> (rng() % 40);
    EXPECT_EQ(isqrt_exact(v).has_value(), brute::is_square(v)) << v;
    const u64 r = isqrt_floor(v);
    EXPECT_LE(square(r), v);
    EXPECT_GT(square(r + 1), v);
  }
}

TEST(Factorize, SmallValues) {
  EXPECT_TRUE(factorize(1).factors.empty());
  const auto f = factorize(360);
  ASSERT_EQ(f.factors.size(), 3U);
  EXPECT_EQ(f.factors[0], (PrimePower{2, 3}));
  EXPECT_EQ(f.factors[1], (PrimePower{3, 2}));
  EXPECT_EQ(f.factors[2], (PrimePower{5, 1}));
  EXPECT_EQ(f.distinct_odd(), 2U);
  EXPECT_THROW(factorize(0), InvalidInput);
}

TEST(Factorize, LargePrimeAndSemiprime) {
  const auto p = factorize(1000000007ULL);
  ASSERT_EQ(p.factors.size(), 1U);
  EXPECT_EQ(p.factors[0].prime, 1000000007ULL);
  const auto s = factorize(1000003ULL * 999983ULL);
  ASSERT_EQ(s.factors.size(), 2U);
  EXPECT_EQ(s.factors[0].prime, 999983ULL);
}

TEST(Factorize, InvariantsUpTo5000) {
  for (u64 v = 1; v <= 5000; ++v) {
    const auto f = factorize(v);
    EXPECT_EQ(f.product(), v);
    for (std::size_t i = 1; i < f.factors.size(); ++i) EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    EXPECT_EQ(f.distinct(), brute::omega(v)) << v;
    u64 count = 0;
    for (u64 d = 1; d <= v; ++d) count += v % d == 0;
    EXPECT_EQ(divisors(f).size(), count);
  }
}

TEST(Factorize, UnitaryDivisors) {
  EXPECT_EQ(unitary_divisors(factorize(360)), (std::vector<u64>{1, 5, 8, 9, 40, 45, 72, 360}));
}

TEST(Checked, OverflowThrows) {
  EXPECT_THROW(mul_checked(1ULL << 32, 1ULL << 32), OverflowError);
  EXPECT_THROW(add_checked(~0ULL, 1), OverflowError);
  EXPECT_THROW(narrow(static_cast<u128>(1) << 64, "test"), OverflowError);
  EXPECT_EQ(to_string(square(~0ULL)), "340282366920938463426481119284349108225");
}
