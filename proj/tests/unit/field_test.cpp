#include <gtest/gtest.h>

#include "hilbertkit/error.hpp"
#include "hilbertkit/field.hpp"

using namespace hilbertkit;

namespace {

// Schoolbook product of two encoded elements mod the field's modulus, digit by
// digit, with no tables.
std::uint32_t naive_mul(const FieldSpec& f, std::uint32_t a, std::uint32_t b) {
  const int p = f.characteristic();
  const int e = f.degree();
  std::vector<int> x(static_cast<std::size_t>(e)), y(static_cast<std::size_t>(e)), prod(static_cast<std::size_t>(2 * e), 0);
  for (int i = 0; i < e; ++i) {
    x[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<std::uint32_t>(p));
    a /= static_cast<std::uint32_t>(p);
    y[static_cast<std::size_t>(i)] = static_cast<int>(b % static_cast<std::uint32_t>(p));
    b /= static_cast<std::uint32_t>(p);
  }
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p;
  const auto& m = f.modulus();
  for (int k = 2 * e - 1; k >= e; --k) {
    const int c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= e; ++i) {
      auto& slot = prod[static_cast<std::size_t>(k - e + i)];
      slot = ((slot - c * m[static_cast<std::size_t>(i)]) % p + p) % p;
    }
  }
  std::uint32_t out = 0;
  for (int i = e - 1; i >= 0; --i) out = out * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(prod[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

TEST(Field, SmallExamples) {
  const auto f2 = make_field(2, 1);
  EXPECT_EQ(f2.add(f2.one(), f2.one()), f2.zero());
  const auto f3 = make_field(3, 1);
  EXPECT_EQ(f3.mul(f3.element(2), f3.element(2)), f3.one());
  const auto f5 = make_field(5, 1);
  EXPECT_EQ(f5.inv(f5.element(2)), f5.element(3));
}

TEST(Field, Gf4SatisfiesASquaredIsAPlusOne) {
  const auto f = make_field(2, 2);
  EXPECT_EQ(f.modulus(), (std::vector<int>{1, 1, 1}));
  for (std::uint32_t a = 2; a < 4; ++a) {
    const auto x = f.element(a);
    EXPECT_EQ(f.mul(x, x), f.add(x, f.one()));
  }
}

TEST(Field, Gf9WithXSquaredPlusOne) {
  const auto f = make_field(3, 2, std::vector<int>{1, 0, 1});
  const auto x = f.element(3);  // the element X
  EXPECT_EQ(f.mul(x, x), f.element(2));
}

TEST(Field, TablesMatchSchoolbookMultiplication) {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {2, 8}, {2, 10}, {7, 3}}) {
    const auto f = make_field(p, e);
    const std::uint32_t q = f.order();
    const std::uint32_t step = q > 256 ? 37 : 1;
    for (std::uint32_t a = 0; a < q; a += step)
      for (std::uint32_t b = 0; b < q; b += step) ASSERT_EQ(f.mul(f.element(a), f.element(b)).value, naive_mul(f, a, b)) << p << "^" << e;
  }
}

TEST(Field, AxiomsHold) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u, 128u, 256u, 343u, 1024u, 4096u}) {
    const auto r = FieldSpec::of_order(q).check_axioms();
    EXPECT_TRUE(r.ok) << q << ": " << r.failure;
    EXPECT_EQ(r.exhaustive, q <= 64);
  }
}

TEST(Field, Errors) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of([] { make_field(4, 1); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { make_field(2, 13); }), ErrorCode::OrderTooLarge);
  EXPECT_EQ(code_of([] { make_field(2, 2, std::vector<int>{1, 0, 1}); }), ErrorCode::NotIrreducible);
  EXPECT_EQ(code_of([] { make_field(3, 1).inv(FieldElement{0}); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { FieldSpec::of_order(6); }), ErrorCode::NotPrime);
}

TEST(Field, CanonicalModulusIsLexLeastIrreducible) {
  EXPECT_EQ(canonical_modulus(2, 2), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(canonical_modulus(2, 3), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(canonical_modulus(3, 2), (std::vector<int>{1, 0, 1}));
  EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));
  EXPECT_TRUE(is_irreducible(2, {1, 1, 0, 0, 1}));
}

TEST(Field, PowAndFermat) {
  for (std::uint32_t q : {4u, 9u, 343u}) {
    const auto f = FieldSpec::of_order(q);
    for (std::uint32_t a = 0; a < q; a += 5) EXPECT_EQ(f.pow(f.element(a), q), f.element(a));
  }
}
