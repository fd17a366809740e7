#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "convert.hpp"
#include "hilbertkit/error.hpp"
#include "hilbertkit/extract.hpp"
#include "hilbertkit/hilbert.hpp"
#include "oracles.hpp"

using namespace hilbertkit;
using nlohmann::json;
using testing_support::to_set;

namespace {

PolynomialGF2 poly(int n, int d, std::vector<std::uint64_t> monomials) { return PolynomialGF2::from_monomials(n, d, monomials); }

// Variable masks in the MSB-first convention.
std::uint64_t var(int n, int i) { return std::uint64_t{1} << (n - 1 - i); }

}  // namespace

TEST(Gf2Polynomial, BasisAndEvaluation) {
  EXPECT_EQ(multilinear_basis(2, 2).size(), 4u);
  EXPECT_EQ(multilinear_basis(5, 2).size(), 16u);
  const auto p = poly(3, 2, {0, var(3, 0) | var(3, 2)});  // 1 + x1 x3
  EXPECT_TRUE(p.evaluate(0b000));
  EXPECT_FALSE(p.evaluate(0b101));
  EXPECT_TRUE(p.evaluate(0b100));
  EXPECT_EQ(p + p, PolynomialGF2(3, 2));
  EXPECT_EQ(poly(3, 1, {var(3, 1), var(3, 1)}), PolynomialGF2(3, 1));
}

TEST(Source, RealizeExamples) {
  const auto identity = SourceSpec::from_json(json::parse(R"({"kind":"local","m":2,"n":2,"payload":{"outputs":[
      {"vars":[0],"table":[0,1]},{"vars":[1],"table":[0,1]}]}})"));
  const auto x = realize_distribution(identity);
  EXPECT_EQ(x.support_size(), 4u);
  EXPECT_DOUBLE_EQ(x.min_entropy(), 2.0);

  const auto constant = SourceSpec::from_json(json::parse(R"({"kind":"explicit_table","m":1,"n":2,"payload":{"table":[[1,0],[1,0]]}})"));
  EXPECT_DOUBLE_EQ(realize_distribution(constant).min_entropy(), 0.0);

  const auto xor_map = SourceSpec::from_json(json::parse(R"({"kind":"poly_map","m":2,"n":2,"payload":{"outputs":[[[0]],[[0],[1]]]}})"));
  const auto y = realize_distribution(xor_map);
  EXPECT_EQ(y.support_size(), 4u);
  EXPECT_TRUE(y.min_entropy_at_least(2));
}

TEST(Source, KindsAgree) {
  // x1 = u1 AND u2, x2 = u3, written four ways.
  const auto forest = json::parse(R"({"kind":"decision_forest","m":3,"n":2,"payload":{"trees":[
      {"nodes":[{"var":0,"lo":1,"hi":2},{"leaf":0},{"var":1,"lo":1,"hi":3},{"leaf":1}]},
      {"nodes":[{"var":2,"lo":1,"hi":2},{"leaf":0},{"leaf":1}]}]}})");
  const auto local = json::parse(R"({"kind":"local","m":3,"n":2,"payload":{"outputs":[
      {"vars":[0,1],"table":[0,0,0,1]},{"vars":[2],"table":[0,1]}]}})");
  const auto circuit = json::parse(R"({"kind":"circuit","m":3,"n":2,"payload":{"gates":[{"op":"and","in":[0,1]}],"outputs":[3,2]}})");
  const auto polys = json::parse(R"({"kind":"poly_map","m":3,"n":2,"payload":{"outputs":[[[0,1]],[[2]]]}})");
  const auto ref = realize_distribution(SourceSpec::from_json(local)).to_json();
  EXPECT_EQ(realize_distribution(SourceSpec::from_json(forest)).to_json(), ref);
  EXPECT_EQ(realize_distribution(SourceSpec::from_json(circuit)).to_json(), ref);
  EXPECT_EQ(realize_distribution(SourceSpec::from_json(polys)).to_json(), ref);
}

TEST(Source, MalformedInputIsAParseError) {
  for (const char* text : {R"({"kind":"local","m":2,"n":1,"payload":{"outputs":[{"vars":[5],"table":[0,1]}]}})",
                           R"({"kind":"warp","m":1,"n":1,"payload":{}})", R"({"m":1,"n":1})",
                           R"({"kind":"explicit_table","m":1,"n":1,"payload":{"table":[[0]]}})"}) {
    try {
      SourceSpec::from_json(json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << text;
    }
  }
  SourceSpec big{SourceKind::explicit_table, 25, 1, json::object()};
  EXPECT_THROW(realize_distribution(big), Error);
}

TEST(Extract, DisperserExamples) {
  EXPECT_EQ(disperser_fail_prob_exact(PointSet::full_space(2, 2), 1), Rational(1, 4));
  EXPECT_EQ(disperser_fail_prob_exact(to_set(2, 2, {{1, 0}}), 1), Rational(1));
  EXPECT_EQ(disperser_fail_prob_exact(to_set(2, 2, {{0, 0}, {1, 1}}), 1), Rational(1, 2));
  EXPECT_THROW(disperser_fail_prob_exact(PointSet(2, 2), 1), Error);
}

TEST(Extract, DisperserMatchesEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    const auto space = oracle::all_points(std::vector<int>(static_cast<std::size_t>(n), 2));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space.size()); mask += 3) {
      const auto s = testing_support::subset(space, mask);
      for (int d = 0; d <= n; ++d) {
        const auto [num, den] = oracle::constant_fraction(s, n, d);
        ASSERT_EQ(disperser_fail_prob_exact(to_set(2, n, s), d), Rational(num, den));
      }
    }
  }
}

TEST(Extract, DisperserFamily) {
  const auto r = disperser_family_prob({Distribution::uniform(2)}, 2, 1);
  ASSERT_TRUE(r.floor_exact.has_value());
  EXPECT_EQ(*r.floor_exact, Rational(3, 4));
  EXPECT_EQ(r.success(), Rational(3, 4));
  EXPECT_EQ(disperser_family_prob({}, 2, 1).success(), Rational(1));

  const auto a = Distribution::uniform_on(3, {0b000, 0b001, 0b010, 0b011});
  const auto b = Distribution::uniform_on(3, {0b100, 0b101, 0b110, 0b111});
  const auto two = disperser_family_prob({a, b}, 2, 1);
  EXPECT_TRUE(two.failure_exact);
  EXPECT_LE(two.failure, two.per_source[0] + two.per_source[1]);
  // Constant on both supports: the two constants, x1 and 1 + x1.
  EXPECT_EQ(two.failure, Rational(1, 4) + Rational(1, 4) - Rational(4, 16));
  EXPECT_THROW(disperser_family_prob({Distribution::point_mass(3, 1)}, 1, 1), Error);
}

TEST(Extract, BiasAndCorrelation) {
  const auto u3 = Distribution::uniform(3);
  EXPECT_EQ(bias_exact(PolynomialGF2(3, 1), u3), Rational(0));
  EXPECT_EQ(bias_exact(PolynomialGF2::variable(3, 1, 0), u3), Rational(1, 2));
  const auto x = Distribution::uniform_on(2, {0b00, 0b01, 0b10});
  EXPECT_EQ(bias_exact(poly(2, 1, {var(2, 0), var(2, 1)}), x), Rational(2, 3));
  EXPECT_EQ(correlation_exact(PolynomialGF2::variable(2, 1, 0), [](std::uint64_t v) { return (v >> 1 & 1) == 1; }, x), Rational(1));
}

TEST(Extract, ExtractorErrorExamples) {
  const auto even = Distribution::uniform_on(3, {0b000, 0b011, 0b101, 0b110});
  EXPECT_EQ(extractor_error({PolynomialGF2::variable(3, 1, 0), PolynomialGF2::variable(3, 1, 1)}, even), Rational(0));
  EXPECT_EQ(extractor_error({poly(3, 1, {var(3, 0), var(3, 1), var(3, 2)})}, even), Rational(1, 2));
  const auto u4 = Distribution::uniform(4);
  std::vector<PolynomialGF2> coords;
  for (int i = 0; i < 4; ++i) coords.push_back(PolynomialGF2::variable(4, 1, i));
  EXPECT_EQ(extractor_error(coords, u4), Rational(0));
  const auto x = Distribution::uniform_on(2, {0b00, 0b01, 0b10});
  const auto p = poly(2, 1, {var(2, 0), var(2, 1)});
  EXPECT_EQ(extractor_error({p}, x), Rational(1, 6));
  EXPECT_THROW(extractor_error(std::vector<PolynomialGF2>(21, PolynomialGF2(2, 1)), x), Error);
}

TEST(Extract, ExtractorErrorInvariances) {
  Rng rng(42);
  const auto x = Distribution::uniform_on(5, {1, 4, 7, 9, 12, 19, 22, 30, 31});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PolynomialGF2> ps{sample_poly(5, 2, rng), sample_poly(5, 2, rng), sample_poly(5, 2, rng)};
    const Rational base = extractor_error(ps, x);
    EXPECT_EQ(extractor_error({ps[2], ps[0], ps[1]}, x), base);
    auto flipped = ps;
    flipped[1] = flipped[1] + poly(5, 2, {0});
    EXPECT_EQ(extractor_error(flipped, x), base);
    Rational chain = 0;
    for (const auto& h : hybrid_distances(ps, x)) chain += h;
    EXPECT_LE(base, chain);
  }
}

TEST(Extract, SamplerIsFairAndDeterministic) {
  Rng a(7), b(7);
  EXPECT_EQ(sample_poly(6, 2, a), sample_poly(6, 2, b));
  Rng rng(1);
  std::vector<double> ones(multilinear_basis(6, 2).size(), 0.0);
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const auto p = sample_poly(6, 2, rng);
    for (std::size_t j = 0; j < ones.size(); ++j) ones[j] += p.coeffs()[j];
  }
  const double sigma = std::sqrt(0.25 / samples);
  for (double c : ones) EXPECT_NEAR(c / samples, 0.5, 3 * sigma);
  std::size_t count = 0;
  for_each_poly(2, 2, [&](const PolynomialGF2&) { ++count; });
  EXPECT_EQ(count, 16u);
}

TEST(Extract, SuccessRate) {
  ExperimentConfig cfg;
  cfg.seed = 3;
  cfg.trials = 200;
  const auto point = extractor_success_rate(Distribution::point_mass(4, 5), 2, 0.1, cfg);
  EXPECT_EQ(point.successes, 0u);
  EXPECT_TRUE(point.vacuous);
  ExperimentConfig ex;
  ex.exhaustive = true;
  const auto r = extractor_success_rate(Distribution::uniform(3), 1, 0.1, ex);
  EXPECT_EQ(r.trials, 16u);
  // Balanced iff some variable appears: 14 of 16 degree-1 polynomials.
  EXPECT_EQ(r.successes, 14u);
  cfg.jobs = 3;
  const auto threaded = extractor_success_rate(Distribution::uniform(6), 2, 0.1, cfg);
  cfg.jobs = 1;
  EXPECT_EQ(extractor_success_rate(Distribution::uniform(6), 2, 0.1, cfg).to_json(), threaded.to_json());
}

TEST(Extract, Covering) {
  const auto two = covering_experiment(PointSet::full_space(2, 4), 1, 1, 100, 5);
  EXPECT_EQ(two.subset_size, 2u);
  EXPECT_EQ(two.full_dimension, 100u);
  EXPECT_TRUE(covering_experiment(PointSet::full_space(2, 3), 3, 1, 10, 5).vacuous);
  EXPECT_THROW(covering_experiment(PointSet::full_space(2, 2), 3, 2, 10, 5), Error);
}

TEST(Extract, SourceCounts) {
  EXPECT_EQ(*source_count_bounds(SourceCountKind::local, 4, 1).exponent_exact, 24u);
  EXPECT_EQ(*source_count_bounds(SourceCountKind::poly, 1, 1, 1).exponent_exact, 2u);
  EXPECT_EQ(*source_count_bounds(SourceCountKind::forest, 2, 1).exponent_exact, 16u);
  EXPECT_EQ(*source_count_bounds(SourceCountKind::circuit, 2, 1, 3).exponent_exact, 40u);
  EXPECT_FALSE(source_count_bounds(SourceCountKind::local, 3, 1).exponent_exact.has_value());
  EXPECT_THROW(source_count_bounds(SourceCountKind::poly, 2, 1), Error);
}

TEST(Extract, MultiOutput) {
  ExperimentConfig cfg;
  cfg.seed = 11;
  cfg.trials = 100;
  const auto r = multi_extractor_experiment(Distribution::uniform(8), 2, 2, 0.1, cfg);
  EXPECT_EQ(r.chain_violations, 0u);
  EXPECT_FALSE(r.degenerate);
  EXPECT_TRUE(multi_extractor_experiment(Distribution::point_mass(4, 2), 1, 1, 0.1, cfg).degenerate);
  // One output reduces to the bias experiment.
  const auto one = multi_extractor_experiment(Distribution::uniform(6), 2, 1, 0.1, cfg);
  const auto rate = extractor_success_rate(Distribution::uniform(6), 2, 0.1, cfg);
  EXPECT_EQ(one.passes, rate.successes);
}
