#include <gtest/gtest.h>

#include <future>
#include <vector>

#include "humplab/combinat.hpp"
#include "humplab/nat.hpp"
#include "humplab/partitions.hpp"
#include "humplab/paths.hpp"
#include "oracles.hpp"

namespace humplab {
namespace {

using combinat::binomial;
using combinat::catalan;
using combinat::factorial;
using combinat::motzkin;

TEST(Nat, ArithmeticAndFormatting) {
  const Nat a = Nat::from_string("123456789012345678901234567890");
  const Nat b(10);
  EXPECT_EQ((a * b).to_string(), "1234567890123456789012345678900");
  EXPECT_EQ((a + b) - b, a);
  EXPECT_TRUE(b.is_even());
  EXPECT_FALSE(Nat(7).is_even());
  EXPECT_LT(b, a);
  EXPECT_EQ(Nat(42).to_u64(), 42u);
  EXPECT_FALSE(a.fits_u64());
  EXPECT_EQ(pow2(100).to_string(), "1267650600228229401496703205376");
}

TEST(Nat, RejectsNegativeResults) {
  EXPECT_THROW(Nat(-1), DomainError);
  EXPECT_THROW(Nat(3) - Nat(4), DomainError);
  EXPECT_THROW(Nat::from_string("-5"), DomainError);
  EXPECT_THROW(Nat::from_string(""), DomainError);
  EXPECT_THROW(Nat::from_string("12a"), DomainError);
}

TEST(Nat, ExactDivisionAsserts) {
  EXPECT_EQ(exact_div(Nat(120), Nat(6)), Nat(20));
  EXPECT_THROW(exact_div(Nat(7), Nat(2)), ConsistencyError);
  EXPECT_THROW(exact_div(Nat(7), Nat(0)), ConsistencyError);
  EXPECT_EQ(exact_half(Nat(10)), Nat(5));
  EXPECT_THROW(exact_half(Nat(11)), ConsistencyError);
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), Nat(1));
  EXPECT_EQ(factorial(1), Nat(1));
  EXPECT_EQ(factorial(5), Nat(120));
  EXPECT_EQ(factorial(25).to_string(), "15511210043330985984000000");
  EXPECT_THROW(factorial(-1), DomainError);
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), Nat(6));
  EXPECT_EQ(binomial(7, 0), Nat(1));
  EXPECT_EQ(binomial(3, 5), Nat(0));
  EXPECT_EQ(binomial(3, -1), Nat(0));
  EXPECT_EQ(binomial(0, 0), Nat(1));
  EXPECT_THROW(binomial(-1, 0), DomainError);
}

TEST(Binomial, MatchesPascalTriangleIn64Bits) {
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(binomial(n, k), Nat(testing::pascal_binomial(n, k))) << n << "," << k;
    }
  }
}

TEST(Binomial, SymmetryAndPascalRuleUpTo200) {
  for (int n = 1; n <= 200; ++n) {
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(binomial(n, k), binomial(n, n - k)) << n << "," << k;
      if (k >= 1) ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
    }
  }
}

TEST(Binomial, ExceedsSixtyFourBits) {
  EXPECT_FALSE(binomial(140, 70).fits_u64());
  EXPECT_EQ(binomial(100, 50).to_string(), "100891344545564193334812497256");
}

TEST(Catalan, Examples) {
  EXPECT_EQ(catalan(0), Nat(1));
  EXPECT_EQ(catalan(2), Nat(2));
  EXPECT_EQ(catalan(3), Nat(5));
  EXPECT_EQ(catalan(14), Nat(2674440));
  EXPECT_THROW(catalan(-2), DomainError);
}

TEST(Catalan, ConvolutionUpTo200) {
  for (int n = 1; n <= 200; ++n) {
    Nat conv;
    for (int j = 1; j <= n; ++j) conv += catalan(j - 1) * catalan(n - j);
    ASSERT_EQ(catalan(n), conv) << n;
  }
}

TEST(Catalan, HalfCatalanFactUpTo200) {
  for (int k = 1; k <= 200; ++k) {
    ASSERT_EQ(Nat(2) * binomial(2 * k - 1, k), Nat(k + 1) * catalan(k)) << k;
  }
}

TEST(Motzkin, Examples) {
  EXPECT_EQ(motzkin(0), Nat(1));
  EXPECT_EQ(motzkin(1), Nat(1));
  EXPECT_EQ(motzkin(4), Nat(9));
  EXPECT_THROW(motzkin(-1), DomainError);
}

TEST(Motzkin, MatchesBruteForcePathCount) {
  for (int n = 0; n <= 10; ++n) {
    ASSERT_EQ(motzkin(n), Nat(testing::brute_force_paths(n, true, false).size())) << n;
  }
}

TEST(Motzkin, AgreesWithEnumerationAndStripHookSum) {
  for (int n = 0; n <= 16; ++n) {
    ASSERT_EQ(motzkin(n), paths::count_enumerated({paths::FamilyKind::Motzkin, n})) << n;
  }
  for (int n = 0; n <= 25; ++n) ASSERT_EQ(motzkin(n), partitions::hook_sum({3, 0}, n)) << n;
}

TEST(Tables, PrefixesMatchPointValues) {
  const auto c = combinat::catalan_table(30);
  const auto m = combinat::motzkin_table(30);
  ASSERT_EQ(c.size(), 31u);
  ASSERT_EQ(m.size(), 31u);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(c[static_cast<std::size_t>(n)], catalan(n));
    EXPECT_EQ(m[static_cast<std::size_t>(n)], motzkin(n));
  }
}

TEST(Memo, ConcurrentCallersSeeTheSameValues) {
  std::vector<std::future<std::vector<Nat>>> jobs;
  for (int t = 0; t < 8; ++t) {
    jobs.push_back(std::async(std::launch::async, [t] {
      std::vector<Nat> v;
      for (int n = 300 - t; n >= 0; n -= 7) v.push_back(motzkin(n) + catalan(n) + factorial(n));
      return v;
    }));
  }
  for (int t = 0; t < 8; ++t) {
    const auto got = jobs[static_cast<std::size_t>(t)].get();
    std::size_t i = 0;
    for (int n = 300 - t; n >= 0; n -= 7, ++i) {
      ASSERT_EQ(got[i], motzkin(n) + catalan(n) + factorial(n));
    }
  }
}

}  // namespace
}  // namespace humplab
