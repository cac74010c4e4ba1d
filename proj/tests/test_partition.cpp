#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "derived_oracles.hpp"
#include "permfact/partition.hpp"

using namespace permfact;

namespace {

std::vector<std::vector<int>> parts_of(const PartitionIndex& index) {
  std::vector<std::vector<int>> out;
  for (const auto& p : index) out.push_back(p.parts());
  return out;
}

}  // namespace

TEST(Partition, NormalizesToDescendingAndDropsZeros) {
  const Partition p({1, 0, 3, 1});
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.length(), 3);
  EXPECT_EQ(p.multiplicity(1), 2);
  EXPECT_EQ(p.label(), "3+1+1");
}

TEST(Partition, RejectsNegativeParts) { EXPECT_THROW(Partition({2, -1}), std::invalid_argument); }

TEST(Partition, ParsesLiteralsInAnyOrder) {
  EXPECT_EQ(Partition::parse("1,3"), Partition({3, 1}));
  EXPECT_EQ(Partition::parse(" 2 , 2 "), Partition({2, 2}));
  for (const char* bad : {"", "3,", ",1", "3,x", "0", "-1,2", "2.5"})
    EXPECT_THROW(Partition::parse(bad), std::invalid_argument) << bad;
}

TEST(PartitionIndex, CanonicalOrderForFour) {
  const PartitionIndex index(4);
  EXPECT_EQ(parts_of(index), (std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}}));
  for (std::size_t i = 0; i < index.size(); ++i) EXPECT_EQ(index.rank(index[i]), i);
}

TEST(PartitionIndex, SingletonForOne) {
  const PartitionIndex index(1);
  ASSERT_EQ(index.size(), 1u);
  EXPECT_EQ(index[0], Partition({1}));
}

TEST(PartitionIndex, CountsMatchRecursiveCounter) {
  EXPECT_EQ(PartitionIndex(10).size(), 42u);
  for (int n = 1; n <= 20; ++n) {
    const PartitionIndex index(n);
    EXPECT_EQ(static_cast<std::int64_t>(index.size()), oracle::partition_count(n)) << n;
    EXPECT_EQ(index[0], Partition::ones(n));
    EXPECT_EQ(index[index.size() - 1], Partition::row(n));
    std::set<Partition> distinct(index.begin(), index.end());
    EXPECT_EQ(distinct.size(), index.size());
    for (std::size_t i = 1; i < index.size(); ++i) EXPECT_LT(index[i - 1].parts(), index[i].parts());
  }
}

TEST(PartitionIndex, CeilingAndErrors) {
  EXPECT_THROW(PartitionIndex(0), std::out_of_range);
  EXPECT_THROW(PartitionIndex(21), std::out_of_range);
  EXPECT_THROW(PartitionIndex(9, 8), std::out_of_range);
  EXPECT_THROW(PartitionIndex(3).rank(Partition({2, 2})), std::invalid_argument);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition({2, 1})), Partition({2, 1}));
  EXPECT_EQ(conjugate(Partition({4, 4, 4, 4})), Partition({4, 4, 4, 4}));
  EXPECT_EQ(conjugate(Partition::row(5)), Partition::ones(5));
}

TEST(Conjugate, InvolutionAndRhoAntisymmetry) {
  for (int n = 1; n <= 14; ++n)
    for (const auto& p : PartitionIndex(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(conjugate(p).size(), n);
      EXPECT_EQ(rho(conjugate(p)), -rho(p));
    }
}

TEST(ZValue, Examples) {
  EXPECT_EQ(z_value(Partition({2, 1, 1})), 4);
  EXPECT_EQ(z_value(Partition({1, 1, 1, 1})), 24);
  EXPECT_EQ(class_size(Partition({3, 1})), 8);
}

TEST(ZValue, ClassSizesSumToFactorial) {
  for (int n = 1; n <= 14; ++n) {
    Int total = 0;
    for (const auto& p : PartitionIndex(n)) total += class_size(p);
    EXPECT_EQ(total, factorial(n)) << n;
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(Partition({4})), 6);
  EXPECT_EQ(rho(Partition({1, 1, 1, 1})), -6);
  EXPECT_EQ(rho(Partition({2, 1})), 0);
}

TEST(Rho, HookFormula) {
  for (int n = 1; n <= 15; ++n)
    for (int b = 0; b < n; ++b) {
      std::vector<int> parts{n - b};
      parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
      EXPECT_EQ(2 * rho(Partition(parts)), Int(n) * n - n - 2 * n * b) << n << "," << b;
    }
}

TEST(Rho, BoundedByBinomialWithEqualityOnlyAtExtremes) {
  for (int n = 2; n <= 15; ++n)
    for (const auto& p : PartitionIndex(n)) {
      const Int r = abs(rho(p));
      EXPECT_LE(r, binomial(n, 2));
      EXPECT_EQ(r == binomial(n, 2), p == Partition::row(n) || p == Partition::ones(n)) << p.label();
    }
}

TEST(HookLengths, Examples) {
  auto hooks = hook_lengths(Partition({2, 1}));
  std::multiset<int> got(hooks.begin(), hooks.end());
  EXPECT_EQ(got, (std::multiset<int>{3, 1, 1}));
  EXPECT_EQ(hook_lengths(Partition::row(5)), (std::vector<int>{5, 4, 3, 2, 1}));
  Int prod = 1;
  for (int h : hook_lengths(Partition({3, 1}))) prod *= h;
  EXPECT_EQ(prod, 8);
  EXPECT_EQ(factorial(4) / prod, oracle::syt_count({3, 1}));
}

TEST(HookLengths, ProductDividesFactorialIntoSytCount) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : PartitionIndex(n)) {
      Int prod = 1;
      for (int h : hook_lengths(p)) prod *= h;
      EXPECT_EQ(factorial(n) / prod, oracle::syt_count(p.parts())) << p.label();
      EXPECT_EQ(factorial(n) % prod, 0);
    }
}

TEST(ParityCensus, NFour) {
  // Lengths: 1111 -> 4, 211 -> 3, 22 -> 2, 31 -> 2, 4 -> 1.
  const auto c = partition_parity_census(4);
  EXPECT_EQ(c.evens, 3);
  EXPECT_EQ(c.odds, 2);
  EXPECT_EQ(c.self_conjugates, 1);
}

TEST(ParityCensus, NOne) {
  const auto c = partition_parity_census(1);
  EXPECT_EQ(c.evens, 0);
  EXPECT_EQ(c.odds, 1);
  EXPECT_EQ(c.self_conjugates, 1);
}

TEST(ParityCensus, DifferenceEqualsSelfConjugateCount) {
  for (int n = 3; n <= 20; ++n) {
    const auto c = partition_parity_census(n);
    Int direct_sc = 0;
    Int direct_even = 0;
    const PartitionIndex index(n);
    for (const auto& p : index) {
      direct_sc += conjugate(p) == p;
      direct_even += p.length() % 2 == 0;
    }
    EXPECT_EQ(c.self_conjugates, direct_sc);
    EXPECT_EQ(c.evens, direct_even);
    EXPECT_EQ(c.evens + c.odds, Int(index.size()));
    EXPECT_EQ(abs(c.evens - c.odds), direct_sc) << n;
  }
}
