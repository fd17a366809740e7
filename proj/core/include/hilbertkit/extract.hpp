#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbertkit/distribution.hpp"
#include "hilbertkit/gf2_polynomial.hpp"
#include "hilbertkit/integer.hpp"
#include "hilbertkit/point_set.hpp"
#include "hilbertkit/source.hpp"

namespace hilbertkit {

/// Seedable, splittable 64-bit generator: std::mt19937_64 seeded through
/// std::seed_seq from the 32-bit halves of (seed, stream). Trial i of an
/// experiment uses stream i, so results do not depend on the worker count.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/seed_seq(seed,stream)";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return gen_(); }
  /// Uniform on [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 gen_;
};

/// Each coefficient over multilinear_basis(n, d) is an independent fair bit.
PolynomialGF2 sample_poly(int n, int d, Rng& rng);

/// Visits every polynomial of Poly_2(n, d) in coefficient-counter order.
/// binom(n, <=d) <= 24 (SpaceTooLarge otherwise).
void for_each_poly(int n, int d, const std::function<void(const PolynomialGF2&)>& visit);

/// Pr over uniform p in Poly_2(n, d) that p is constant on S, computed as
/// 2^{1 - h_S(d)}. S must be a nonempty set over GF(2) (EmptySet).
Rational disperser_fail_prob_exact(const PointSet& s, long long d);

struct DisperserFamilyResult {
  /// 1 - |X| * 2^{1 - binom(k, <=d)}; exact when the exponent is small.
  std::optional<Rational> floor_exact;
  double floor = 1.0;
  /// Pr[p constant on some source's support]: exact union by
  /// inclusion-exclusion for at most 3 sources, else the per-source sum.
  Rational failure;
  bool failure_exact = true;
  std::vector<Rational> per_source;

  Rational success() const { return Rational(1) - failure; }
};

/// Throws MinEntropyBelowK if some source has min-entropy below k.
DisperserFamilyResult disperser_family_prob(const std::vector<Distribution>& sources, long long k, int d);

/// Pr_{x ~ X}[p(x) = 1].
Rational bias_exact(const PolynomialGF2& p, const Distribution& x);
/// Pr_{x ~ X}[p(x) = g(x)].
Rational correlation_exact(const PolynomialGF2& p, const std::function<bool(std::uint64_t)>& g, const Distribution& x);

inline constexpr int kMaxOutputBits = 20;

/// Statistical distance between (p_1(X), ..., p_t(X)) and U_t. The first
/// polynomial gives the most significant output bit. t <= 20
/// (OutputSpaceTooLarge otherwise).
Rational extractor_error(const std::vector<PolynomialGF2>& polys, const Distribution& x);

/// Hybrid distances Delta(D_i, D_{i+1}) for i = 0..t-1, where D_i takes the
/// first i bits from the polynomials and the rest uniform.
std::vector<Rational> hybrid_distances(const std::vector<PolynomialGF2>& polys, const Distribution& x);

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  /// Enumerate all of Poly_2(n, d) instead of sampling (binom(n, <=d) <= 20).
  bool exhaustive = false;
  unsigned jobs = 1;

  static constexpr double kC = 7.0 * 32 * 32;

  /// ell = k/2 - log2(32 n / eps).
  static double ell(double k, int n, double eps);
};

struct SuccessRateReport {
  int n = 0;
  int d = 0;
  double eps = 0;
  double min_entropy = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double rate = 0;
  double ell = 0;
  /// binom(floor(ell), <=d), the count entering the floor.
  double binom_ell = 0;
  double floor = 0;
  double margin = 0;
  bool vacuous = false;
  bool exhaustive = false;
  bool passes = false;

  nlohmann::json to_json() const;
};

/// Fraction of polynomials with |bias - 1/2| <= eps on X, against the floor
/// 1 - e^{3n - eps^2 binom(ell, <=d) / (C n^2)}. The floor is vacuous when
/// ell <= 0 or the floor is <= 0; otherwise the rate must reach the floor
/// minus three binomial standard deviations.
SuccessRateReport extractor_success_rate(const Distribution& x, int d, double eps, const ExperimentConfig& config);

struct CoveringReport {
  int ell = 0;
  int d = 0;
  std::size_t set_size = 0;
  std::size_t subset_size = 0;
  std::uint64_t trials = 0;
  std::uint64_t full_dimension = 0;
  double rate = 0;
  /// delta = binom(ell, <=d) 2^ell / |S|; the claim floor is 1 - delta.
  double delta = 0;
  double floor = 0;
  double margin = 0;
  bool vacuous = false;
  bool passes = false;
  /// Inclusion frequencies of single elements among full-dimension subsets,
  /// against the band [(1-delta) s/|S|, s/((1-delta)|S|)].
  double band_lo = 0;
  double band_hi = 0;
  double min_inclusion = 0;
  double max_inclusion = 0;
  double within_band = 0;

  nlohmann::json to_json() const;
};

/// Samples uniform subsets T of S with |T| = binom(ell, <=d) and counts those
/// with h_T(d) = |T|. S lives in F_2^n. SetTooSmall if |T| > |S|.
CoveringReport covering_experiment(const PointSet& s, int ell, int d, std::uint64_t trials, std::uint64_t seed);

enum class SourceCountKind { local, forest, poly, circuit };
SourceCountKind parse_source_count_kind(const std::string& text);
const char* to_string(SourceCountKind kind) noexcept;

struct SourceCountBound {
  SourceCountKind kind = SourceCountKind::local;
  /// log2 of the number of sources.
  double exponent = 0;
  /// Exact integer exponent when it is one (log n terms need n a power of 2).
  std::optional<u128> exponent_exact;
  std::string formula;

  nlohmann::json to_json() const;
};

/// Exponents: local 2^l n + 2 l n log n; forest (l + log n) 2^{l+1} n;
/// poly n binom(m, <=l); circuit 4 n^l (n^l + m). poly and circuit need m.
SourceCountBound source_count_bounds(SourceCountKind kind, int n, int ell, std::optional<int> m = std::nullopt);

struct MultiExtractorReport {
  int n = 0;
  int d = 0;
  int t = 0;
  double eps = 0;
  double min_entropy = 0;
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  double pass_rate = 0;
  double mean_error = 0;
  /// Error quantiles at 0, 0.5, 0.9, 0.99 and 1.
  std::vector<double> error_quantiles;
  /// Runs where Delta(D_0, D_t) exceeded the sum of hybrid distances.
  std::uint64_t chain_violations = 0;
  /// t >= min-entropy, or a one-point support.
  bool degenerate = false;
  bool exhaustive = false;

  nlohmann::json to_json() const;
};

/// Samples t independent polynomials per trial, computes the exact
/// extractor error and the hybrid chain, and counts runs with error <= t eps.
MultiExtractorReport multi_extractor_experiment(const Distribution& x, int d, int t, double eps, const ExperimentConfig& config);

}  // namespace hilbertkit
