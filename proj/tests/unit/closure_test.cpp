#include <gtest/gtest.h>

#include <random>

#include "convert.hpp"
#include "hilbertkit/closure.hpp"
#include "hilbertkit/error.hpp"
#include "oracles.hpp"

using namespace hilbertkit;
using testing_support::to_set;
using testing_support::to_vecs;

TEST(Closure, Examples) {
  const auto f2 = FieldSpec::of_order(2);
  EXPECT_EQ(closure(f2, PointSet::full_space(2, 3), 2), PointSet::full_space(2, 3));
  EXPECT_EQ(closure(f2, to_set(2, 2, {{0, 0}, {0, 1}, {1, 0}}), 1), PointSet::full_space(2, 2));
  EXPECT_EQ(closure(f2, to_set(2, 2, {{0, 0}}), 1), to_set(2, 2, {{0, 0}}));
  EXPECT_TRUE(closure(f2, PointSet(2, 3), 1).empty());
  EXPECT_TRUE(closure(f2, PointSet(2, 3), 0).empty());
}

TEST(Closure, MatchesVanishingPolynomialOracle) {
  std::mt19937 rng(3);
  for (auto [p, n, d] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {3, 2, 2}, {2, 4, 1}, {5, 1, 2}}) {
    const auto f = FieldSpec::of_order(static_cast<std::uint32_t>(p));
    const auto space = oracle::all_points(std::vector<int>(static_cast<std::size_t>(n), p));
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<oracle::Vec> t;
      for (const auto& x : space)
        if (rng() % 4 == 0) t.push_back(x);
      const auto got = closure(f, to_set(static_cast<std::uint32_t>(p), n, t), d, 1 + trial % 3);
      const auto expected = oracle::closure(t, n, p, d);
      ASSERT_EQ(to_vecs(got), std::vector<oracle::Vec>(expected.begin(), expected.end()));
    }
  }
}

TEST(Closure, OperatorProperties) {
  std::mt19937 rng(9);
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = FieldSpec::of_order(q);
    const int n = q == 2 ? 4 : 3;
    const auto space = PointSet::full_space(q, n);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Point> a, b;
      for (const auto& x : space) {
        const auto r = rng() % 8;
        if (r == 0) a.push_back(x);
        if (r <= 1) b.push_back(x);
      }
      const PointSet t(q, n, a), u(q, n, b);
      for (long long d = 0; d + 1 <= n * static_cast<long long>(q - 1); ++d) {
        const auto cl = closure(f, t, d);
        ASSERT_TRUE(t.is_subset_of(cl));
        ASSERT_TRUE(cl.is_subset_of(closure(f, u, d)));
        ASSERT_EQ(closure(f, cl, d), cl);
        ASSERT_TRUE(closure(f, t, d + 1).is_subset_of(cl));
        ASSERT_EQ(hilbert_function(f, cl, d), hilbert_function(f, t, d));
      }
    }
  }
}

TEST(Closure, JobsDoNotChangeTheResult) {
  const auto f = FieldSpec::of_order(3);
  const auto t = to_set(3, 4, {{0, 0, 0, 0}, {1, 2, 0, 1}, {2, 2, 2, 1}, {0, 1, 1, 0}, {1, 1, 1, 1}});
  const auto one = closure(f, t, 2, 1);
  for (unsigned jobs : {2u, 3u, 8u}) EXPECT_EQ(closure(f, t, 2, jobs), one);
}

TEST(Closure, SizeBound) {
  EXPECT_EQ(closure_size_bound(2, 3, 1, 3), 4u);
  EXPECT_EQ(closure_size_bound(2, 3, 1, 4), 8u);
  EXPECT_EQ(closure_size_bound(2, 3, 1, 0), 0u);
  EXPECT_EQ(closure_size_bound(3, 2, 1, 3), 9u);
  EXPECT_THROW(closure_size_bound(2, 3, 1, 9), Error);
  for (long long d = 0; d <= 3; ++d)
    for (u128 m = 0; m <= 8; ++m) {
      u128 expected = 0;
      for (std::uint64_t k = 0; k <= 8; ++k)
        if (oracle::low_weight_prefix({2, 2, 2}, k, d) <= m) expected = k;
      EXPECT_EQ(closure_size_bound(2, 3, d, m), expected);
    }
}

TEST(Closure, TightSet) {
  const auto f2 = FieldSpec::of_order(2);
  const auto emb = GridEmbedding::canonical(f2, GridShape::hypercube(2, 3));
  const auto t = tight_closure_set(emb, 1, 3);
  EXPECT_EQ(t, to_set(2, 3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(closure(f2, t, 1).size(), 4u);
  const auto t4 = tight_closure_set(emb, 1, 4);
  EXPECT_EQ(t4.size(), 4u);
  EXPECT_EQ(closure(f2, t4, 1).size(), 8u);
  EXPECT_EQ(tight_closure_set(emb, 1, 8), PointSet::full_space(2, 3));
}

TEST(Closure, NieWang) {
  EXPECT_EQ(nie_wang_bound(2, 3, 1, 3), Rational(6));
  EXPECT_EQ(nie_wang_bound(2, 3, 1, 0), Rational(0));
  EXPECT_EQ(nie_wang_bound(2, 4, 1, 4), Rational(64, 5));
}

TEST(Closure, ExponentCheck) {
  const auto f2 = FieldSpec::of_order(2);
  const auto space = oracle::all_points({2, 2, 2, 2});
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) ASSERT_TRUE(closure_exponent_check(f2, 2, 1, to_set(2, 4, {space[i], space[j]})));
  EXPECT_TRUE(closure_exponent_check(f2, 2, 1, PointSet(2, 4)));
  EXPECT_TRUE(closure_exponent_check(FieldSpec::of_order(3), 1, 1, to_set(3, 2, {{1, 2}})));
  EXPECT_THROW(closure_exponent_check(f2, 2, 1, to_set(2, 4, {space[0], space[1], space[2]})), Error);
}

TEST(Closure, SpaceCap) { EXPECT_THROW(ClosureEngine(FieldSpec::of_order(2), 25, 1), Error); }
