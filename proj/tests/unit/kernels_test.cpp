#include <gtest/gtest.h>

#include <random>

#include "seqcal/kernels.hpp"
#include "seqcal/state_set.hpp"

namespace seqcal::kernels {
namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) {
    x = rng();
    for (int i = 0; i < density; ++i) x &= rng();
  }
  return w;
}

TEST(Kernels, Avx2MatchesScalar) {
  const Table* fast = avx2();
  if (!fast) GTEST_SKIP() << "no AVX2 on this machine or build";
  const Table& ref = scalar();
  std::mt19937_64 rng(99);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 17u, 31u, 64u, 129u}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_words(rng, n, trial % 3), b = random_words(rng, n, trial % 2);
      if (trial % 5 == 0) b = a;
      if (trial % 7 == 0)
        for (std::size_t i = 0; i < n; ++i) b[i] |= a[i];
      std::vector<std::uint64_t> d1(n), d2(n);
      ref.and_words(d1.data(), a.data(), b.data(), n);
      fast->and_words(d2.data(), a.data(), b.data(), n);
      EXPECT_EQ(d1, d2);
      ref.or_words(d1.data(), a.data(), b.data(), n);
      fast->or_words(d2.data(), a.data(), b.data(), n);
      EXPECT_EQ(d1, d2);
      ref.andnot_words(d1.data(), a.data(), b.data(), n);
      fast->andnot_words(d2.data(), a.data(), b.data(), n);
      EXPECT_EQ(d1, d2);
      EXPECT_EQ(ref.is_subset(a.data(), b.data(), n), fast->is_subset(a.data(), b.data(), n));
      EXPECT_EQ(ref.is_zero(d1.data(), n), fast->is_zero(d1.data(), n));
      EXPECT_EQ(ref.equal(a.data(), b.data(), n), fast->equal(a.data(), b.data(), n));
      EXPECT_EQ(ref.popcount(a.data(), n), fast->popcount(a.data(), n));
    }
  }
}

TEST(Kernels, AliasedDestination) {
  std::mt19937_64 rng(3);
  for (const Table* t : {&scalar(), avx2()}) {
    if (!t) continue;
    auto a = random_words(rng, 13, 0), b = random_words(rng, 13, 0);
    std::vector<std::uint64_t> want(13);
    for (std::size_t i = 0; i < 13; ++i) want[i] = a[i] & ~b[i];
    t->andnot_words(a.data(), a.data(), b.data(), 13);
    EXPECT_EQ(a, want) << t->name;
  }
}

TEST(Kernels, ScalarReference) {
  std::vector<std::uint64_t> a{0b1011, 0}, b{0b1111, 1};
  EXPECT_TRUE(scalar().is_subset(a.data(), b.data(), 2));
  EXPECT_FALSE(scalar().is_subset(b.data(), a.data(), 2));
  EXPECT_EQ(scalar().popcount(b.data(), 2), 5u);
  EXPECT_FALSE(scalar().is_zero(b.data(), 2));
}

TEST(Kernels, SelectionSwitchesTheActiveTable) {
  Isa before = active_isa();
  ASSERT_TRUE(select(Isa::kScalar));
  EXPECT_EQ(&active(), &scalar());
  StateSet x(200, {1, 70, 199}), y(200, {70});
  EXPECT_EQ((x & y).count(), 1u);
  EXPECT_TRUE(y.subset_of(x));
  if (avx2()) {
    ASSERT_TRUE(select(Isa::kAvx2));
    EXPECT_EQ(&active(), avx2());
    EXPECT_EQ((x & y).count(), 1u);
    EXPECT_EQ((~x).count(), 197u);
  } else {
    EXPECT_FALSE(select(Isa::kAvx2));
  }
  select(before);
}

TEST(StateSet, Basics) {
  StateSet s(70, {0, 64, 69});
  EXPECT_EQ(s.count(), 3u);
  EXPECT_EQ((~s).count(), 67u);
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 64, 69}));
  EXPECT_TRUE(StateSet(70).empty());
  EXPECT_EQ(StateSet::full(70).count(), 70u);
  EXPECT_EQ((StateSet::full(70) - s).count(), 67u);
  EXPECT_LT(StateSet(4, {0, 1}), StateSet(4, {0, 2}));
  EXPECT_THROW(s & StateSet(71), std::exception);
}

}  // namespace
}  // namespace seqcal::kernels
