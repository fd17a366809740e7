#include <gtest/gtest.h>

#include <random>

#include "convert.hpp"
#include "hilbertkit/echelon.hpp"
#include "hilbertkit/error.hpp"
#include "hilbertkit/hilbert.hpp"
#include "oracles.hpp"

using namespace hilbertkit;
using testing_support::to_set;

namespace {

std::vector<Monomial> monos(std::vector<std::vector<int>> xs) {
  std::vector<Monomial> out;
  for (auto& x : xs) out.emplace_back(std::move(x));
  return out;
}

std::vector<int> values(const std::vector<FieldElement>& v) {
  std::vector<int> out;
  for (auto x : v) out.push_back(x.value);
  return out;
}

}  // namespace

TEST(Hilbert, MonomialOrders) {
  const Monomial x1({1, 0}), x2({0, 1}), one({0, 0}), x1x2({1, 1}), x2sq({0, 2});
  EXPECT_TRUE(monomial_less(MonomialOrder::grlex, x2, x1));
  EXPECT_TRUE(monomial_less(MonomialOrder::grlex, one, x2));
  EXPECT_TRUE(monomial_less(MonomialOrder::lex, x2sq, x1));
  EXPECT_TRUE(monomial_less(MonomialOrder::grlex, x1, x2sq));
  // grevlex: X1 X3 < X2^2 in three variables.
  EXPECT_TRUE(monomial_less(MonomialOrder::grevlex, Monomial({1, 0, 1}), Monomial({0, 2, 0})));
  EXPECT_TRUE(monomial_less(MonomialOrder::grlex, Monomial({0, 2, 0}), Monomial({1, 0, 1})));
  EXPECT_FALSE(monomial_less(MonomialOrder::grlex, x1x2, x1x2));
  EXPECT_THROW(parse_monomial_order("revlex"), Error);
}

TEST(Hilbert, OrdersAreTotalAndDegreeCompatible) {
  const auto all = reduced_monomials(3, 2, 6, MonomialOrder::lex);
  for (auto order : {MonomialOrder::lex, MonomialOrder::grlex, MonomialOrder::grevlex}) {
    for (const auto& a : all)
      for (const auto& b : all) {
        const bool lt = monomial_less(order, a, b);
        const bool gt = monomial_less(order, b, a);
        ASSERT_EQ(lt || gt, !(a == b));
        ASSERT_FALSE(lt && gt);
        if (is_degree_compatible(order) && a.weight() < b.weight()) ASSERT_TRUE(lt);
      }
  }
}

TEST(Hilbert, EvalVector) {
  const auto f2 = FieldSpec::of_order(2);
  const auto base = monos({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(values(eval_vector(f2, testing_support::to_point({0, 0}), base)), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(values(eval_vector(f2, testing_support::to_point({1, 1}), monos({{0, 0}, {1, 0}, {0, 1}, {1, 1}}))), (std::vector<int>{1, 1, 1, 1}));
  const auto f3 = FieldSpec::of_order(3);
  EXPECT_EQ(values(eval_vector(f3, testing_support::to_point({2, 1}), monos({{0, 0}, {1, 0}, {0, 1}, {2, 0}}))), (std::vector<int>{1, 2, 1, 1}));
}

TEST(Hilbert, FunctionExamples) {
  const auto f2 = FieldSpec::of_order(2);
  EXPECT_EQ(hilbert_function(f2, to_set(2, 2, {{1, 0}}), 3), 1u);
  EXPECT_EQ(hilbert_function(f2, to_set(2, 2, {{0, 0}, {1, 1}}), 1), 2u);
  EXPECT_EQ(hilbert_function(f2, PointSet(2, 2), 1), 0u);
  for (std::uint32_t q : {2u, 3u, 4u})
    for (int n = 1; n <= 3; ++n)
      for (long long d = 0; d <= n * static_cast<long long>(q - 1); ++d)
        EXPECT_EQ(hilbert_function(FieldSpec::of_order(q), PointSet::full_space(q, n), d), static_cast<std::size_t>(monomial_count(n, d, static_cast<int>(q - 1))));
}

TEST(Hilbert, MatchesRestrictionCountOracle) {
  std::mt19937 rng(11);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
    const auto f = FieldSpec::of_order(static_cast<std::uint32_t>(p));
    const auto space = oracle::all_points(std::vector<int>(static_cast<std::size_t>(n), p));
    const long long max_d = static_cast<long long>(n) * (p - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const auto s = testing_support::subset(space, rng() & ((std::uint64_t{1} << space.size()) - 1));
      for (long long d = 0; d <= max_d; ++d) {
        if (oracle::monomials(n, p, d).size() > 14) continue;
        ASSERT_EQ(hilbert_function(f, to_set(static_cast<std::uint32_t>(p), n, s), d), static_cast<std::size_t>(oracle::hilbert(s, n, p, d)));
      }
    }
  }
}

TEST(Hilbert, StandardMonomialExamples) {
  const auto f2 = FieldSpec::of_order(2);
  const auto sm = standard_monomials(f2, to_set(2, 2, {{0, 0}, {1, 0}, {0, 1}}), MonomialOrder::grlex);
  EXPECT_EQ(sm.monomials, monos({{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(standard_monomials(f2, PointSet::full_space(2, 2), MonomialOrder::grlex).monomials, monos({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(standard_monomials(f2, to_set(2, 2, {{0, 0}, {1, 1}}), MonomialOrder::grlex).monomials, monos({{0, 0}, {0, 1}}));
  EXPECT_TRUE(standard_monomials(f2, PointSet(2, 2), MonomialOrder::lex).monomials.empty());
}

TEST(Hilbert, ViaStandardMonomials) {
  const auto f2 = FieldSpec::of_order(2);
  EXPECT_EQ(hilbert_via_sm(f2, PointSet::full_space(2, 3), 1, MonomialOrder::grlex), 4u);
  EXPECT_EQ(hilbert_via_sm(f2, to_set(2, 3, {{1, 0, 1}, {0, 1, 1}}), 0, MonomialOrder::grevlex), 1u);
  EXPECT_THROW(hilbert_via_sm(f2, PointSet::full_space(2, 2), 1, MonomialOrder::lex), Error);
}

TEST(Hilbert, SmPropertiesOnRandomSets) {
  std::mt19937 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto f = FieldSpec::of_order(q);
    const int n = q == 2 ? 4 : 2;
    const auto space = PointSet::full_space(q, n);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Point> pts;
      for (const auto& p : space)
        if (rng() % 3 == 0) pts.push_back(p);
      const PointSet s(q, n, pts);
      for (auto order : {MonomialOrder::lex, MonomialOrder::grlex, MonomialOrder::grevlex}) {
        const auto sm = standard_monomials(f, s, order);
        ASSERT_EQ(sm.size(), s.size());
        if (!is_degree_compatible(order)) continue;
        std::size_t prev = 0;
        for (long long d = 0; d <= n * static_cast<long long>(q - 1); ++d) {
          const std::size_t h = hilbert_function(f, s, d);
          ASSERT_EQ(sm.count_up_to_degree(d), h);
          ASSERT_GE(h, prev);
          ASSERT_LE(h, std::min<std::size_t>(s.size(), static_cast<std::size_t>(monomial_count(n, d, static_cast<int>(q - 1)))));
          prev = h;
        }
        ASSERT_EQ(prev, s.size());
      }
    }
  }
}

TEST(Hilbert, MonomialCount) {
  EXPECT_EQ(monomial_count(3, 1, 1), 4u);
  EXPECT_EQ(monomial_count(2, 2, 2), 6u);
  EXPECT_EQ(monomial_count(2, 3, 1), 4u);
  EXPECT_EQ(monomial_count(4, -1, 3), 0u);
  for (int n = 1; n <= 4; ++n)
    for (int delta = 1; delta <= 3; ++delta)
      for (long long d = 0; d <= n * delta; ++d) EXPECT_EQ(monomial_count(n, d, delta), oracle::monomials(n, delta + 1, d).size());
}

TEST(Echelon, RankAndSpan) {
  const auto f3 = FieldSpec::of_order(3);
  auto row = [&](std::vector<int> xs) {
    std::vector<FieldElement> v;
    for (int x : xs) v.push_back(f3.element(static_cast<std::uint32_t>(x)));
    return v;
  };
  EchelonBasis b(f3, 3);
  EXPECT_TRUE(b.insert(row({1, 2, 0})));
  EXPECT_TRUE(b.insert(row({0, 1, 1})));
  EXPECT_FALSE(b.insert(row({2, 1, 0})));
  EXPECT_TRUE(b.in_span(row({1, 0, 1})));
  EXPECT_FALSE(b.in_span(row({0, 0, 1})));
  EXPECT_EQ(values(b.residual(row({1, 2, 0}))), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(rank_of(f3, {row({1, 1, 1}), row({2, 2, 2}), row({0, 0, 0})}), 1u);
}
