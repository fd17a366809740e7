#include "hilbertkit/extract.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "hilbertkit/echelon.hpp"
#include "hilbertkit/error.hpp"
#include "hilbertkit/hilbert.hpp"

namespace hilbertkit {

namespace {

using json = nlohmann::json;

constexpr int kMaxEnumeratedCoefficients = 24;

// Evaluations of every basis monomial on the support of X, one bitset per
// monomial, so that a polynomial's values are an XOR of bitsets.
class SupportTable {
 public:
  SupportTable(const Distribution& x, int d) : x_(x), words_((x.support_size() + 63) / 64) {
    basis_ = multilinear_basis(x.n(), d);
    columns_.assign(basis_.size() * words_, 0);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      for (std::size_t i = 0; i < x.support_size(); ++i) {
        if ((x.support()[i] & basis_[j]) == basis_[j]) columns_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }

  void values(const PolynomialGF2& p, std::vector<std::uint64_t>& out) const {
    out.assign(words_, 0);
    const auto& c = p.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!c[j]) continue;
      const std::uint64_t* col = &columns_[j * words_];
      for (std::size_t w = 0; w < words_; ++w) out[w] ^= col[w];
    }
  }

  std::uint64_t weight_of(const std::vector<std::uint64_t>& bits) const {
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t b = bits[w]; b != 0; b &= b - 1) total += x_.weights()[w * 64 + static_cast<std::size_t>(std::countr_zero(b))];
    }
    return total;
  }

 private:
  const Distribution& x_;
  std::size_t words_;
  std::vector<std::uint64_t> basis_;
  std::vector<std::uint64_t> columns_;
};

void require_arity(const PolynomialGF2& p, const Distribution& x) {
  if (p.n() != x.n()) throw Error(ErrorCode::FieldMismatch, "polynomial and distribution have different n");
}

// Per-support-point output tuples of a list of polynomials (first one most
// significant), accumulated into weights over {0,1}^t.
std::vector<std::uint64_t> output_weights(const std::vector<PolynomialGF2>& polys, const Distribution& x) {
  const std::size_t t = polys.size();
  std::vector<std::uint64_t> w(std::size_t{1} << t, 0);
  for (std::size_t i = 0; i < x.support_size(); ++i) {
    std::size_t y = 0;
    for (const auto& p : polys) y = y << 1 | (p.evaluate(x.support()[i]) ? 1U : 0U);
    w[y] += x.weights()[i];
  }
  return w;
}

Rational distance_to_uniform(const std::vector<std::uint64_t>& w, std::uint64_t total) {
  // sum_y |w_y / T - 2^-t| / 2 = sum_y |w_y 2^t - T| / (2 T 2^t).
  const auto size = static_cast<u128>(w.size());
  u128 acc = 0;
  for (const auto wy : w) {
    const u128 scaled = static_cast<u128>(wy) * size;
    acc += scaled > total ? scaled - total : total - scaled;
  }
  return Rational(to_bigint(acc), to_bigint(static_cast<u128>(2) * total * size));
}

std::vector<Rational> hybrids_from_weights(const std::vector<std::uint64_t>& full, std::size_t t, std::uint64_t total) {
  std::vector<Rational> out;
  // level[i]: weights of the first i output bits.
  std::vector<std::vector<std::uint64_t>> level(t + 1);
  level[t] = full;
  for (std::size_t i = t; i-- > 0;) {
    level[i].assign(std::size_t{1} << i, 0);
    for (std::size_t y = 0; y < level[i + 1].size(); ++y) level[i][y >> 1] += level[i + 1][y];
  }
  for (std::size_t i = 0; i < t; ++i) {
    // Delta(D_i, D_{i+1}) = sum_y |2 W_{i+1}(y) - W_i(y >> 1)| / (4 T).
    u128 acc = 0;
    for (std::size_t y = 0; y < level[i + 1].size(); ++y) {
      const u128 a = static_cast<u128>(level[i + 1][y]) * 2;
      const u128 b = level[i][y >> 1];
      acc += a > b ? a - b : b - a;
    }
    out.emplace_back(to_bigint(acc), to_bigint(static_cast<u128>(4) * total));
  }
  return out;
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

double three_sigma(double p, std::uint64_t trials) {
  const double f = clamp01(p);
  return 3.0 * std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

template <typename Fn>
void run_partitioned(std::uint64_t trials, unsigned jobs, Fn&& body) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(1, trials));
  if (workers == 1) {
    body(0, 0, trials);
    return;
  }
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { body(w, trials * w / workers, trials * (w + 1) / workers); });
  }
  for (auto& th : pool) th.join();
}

std::vector<FieldElement> gf2_row(std::uint64_t x, const std::vector<std::uint64_t>& basis) {
  std::vector<FieldElement> row(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) row[j] = FieldElement{static_cast<std::uint16_t>((x & basis[j]) == basis[j] ? 1 : 0)};
  return row;
}

PointSet support_as_points(const Distribution& x) {
  std::vector<Point> pts;
  for (const auto s : x.support()) {
    Point a(static_cast<std::size_t>(x.n()));
    for (int i = 0; i < x.n(); ++i) a[static_cast<std::size_t>(i)] = FieldElement{static_cast<std::uint16_t>(bit_of(s, x.n(), i))};
    pts.push_back(std::move(a));
  }
  return PointSet(2, x.n(), std::move(pts));
}

double binom_le_double(long long n, long long d) {
  if (n < 0 || d < 0) return 0;
  double term = 1;
  double total = 1;
  for (long long j = 1; j <= std::min(n, d); ++j) {
    term = term * static_cast<double>(n - j + 1) / static_cast<double>(j);
    total += term;
  }
  return total;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  gen_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::OutOfRange, "empty range");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = gen_();
    if (r >= threshold) return r % bound;
  }
}

PolynomialGF2 sample_poly(int n, int d, Rng& rng) {
  if (d > n) throw Error(ErrorCode::OutOfRange, "sample_poly needs d <= n");
  PolynomialGF2 p(n, d);
  std::vector<std::uint8_t> c(p.coeffs().size());
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j % 64 == 0) bits = rng.next();
    c[j] = static_cast<std::uint8_t>(bits >> (j % 64) & 1U);
  }
  return PolynomialGF2(n, d, std::move(c));
}

void for_each_poly(int n, int d, const std::function<void(const PolynomialGF2&)>& visit) {
  const std::size_t count = multilinear_basis(n, d).size();
  if (count > static_cast<std::size_t>(kMaxEnumeratedCoefficients)) {
    throw Error(ErrorCode::SpaceTooLarge, "Poly_2(n, d) has more than 2^24 elements");
  }
  std::vector<std::uint8_t> c(count, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << count); ++code) {
    for (std::size_t j = 0; j < count; ++j) c[j] = static_cast<std::uint8_t>(code >> j & 1U);
    visit(PolynomialGF2(n, d, c));
  }
}

Rational disperser_fail_prob_exact(const PointSet& s, long long d) {
  if (s.q() != 2) throw Error(ErrorCode::FieldMismatch, "disperser probability is defined over GF(2)");
  if (s.empty()) throw Error(ErrorCode::EmptySet, "disperser probability needs a nonempty set");
  const std::size_t h = hilbert_function(make_field(2, 1), s, d);
  return Rational(BigInt(2), BigInt(1) << static_cast<unsigned>(h));
}

DisperserFamilyResult disperser_family_prob(const std::vector<Distribution>& sources, long long k, int d) {
  DisperserFamilyResult r;
  r.failure = 0;
  const double count = static_cast<double>(sources.size());
  const double b = binom_le_double(k, d);
  r.floor = 1.0 - count * std::exp2(1.0 - b);
  if (b <= 4096) {
    const auto bk = static_cast<unsigned>(binom_le(static_cast<std::uint64_t>(std::max<long long>(k, 0)), d));
    r.floor_exact = Rational(1) - Rational(BigInt(static_cast<std::uint64_t>(sources.size())) * 2, BigInt(1) << bk);
  }
  if (sources.empty()) return r;

  const int n = sources.front().n();
  for (const auto& x : sources) {
    if (x.n() != n) throw Error(ErrorCode::FieldMismatch, "sources have different output lengths");
    if (!x.min_entropy_at_least(k)) {
      throw Error(ErrorCode::MinEntropyBelowK, "source min-entropy " + std::to_string(x.min_entropy()) + " is below k = " + std::to_string(k));
    }
    r.per_source.push_back(disperser_fail_prob_exact(support_as_points(x), d));
  }

  if (sources.size() > 3) {
    r.failure_exact = false;
    for (const auto& p : r.per_source) r.failure += p;
    return r;
  }

  // p is constant on every support in J iff p(s) + p(s_0) = 0 for all s,
  // a linear condition; its probability is 2^{-rank}.
  const auto basis = multilinear_basis(n, d);
  const FieldSpec gf2 = make_field(2, 1);
  const std::size_t m = sources.size();
  for (std::uint32_t j = 1; j < (1U << m); ++j) {
    EchelonBasis e(gf2, basis.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (!(j >> i & 1U)) continue;
      const auto& supp = sources[i].support();
      const auto base = gf2_row(supp.front(), basis);
      for (const auto s : supp) {
        auto row = gf2_row(s, basis);
        gf2.axpy(row, gf2.one(), base);
        e.insert(row);
      }
    }
    const Rational term(BigInt(1), BigInt(1) << static_cast<unsigned>(e.rank()));
    if (std::popcount(j) % 2 == 1) {
      r.failure += term;
    } else {
      r.failure -= term;
    }
  }
  return r;
}

Rational bias_exact(const PolynomialGF2& p, const Distribution& x) {
  require_arity(p, x);
  std::uint64_t ones = 0;
  for (std::size_t i = 0; i < x.support_size(); ++i) {
    if (p.evaluate(x.support()[i])) ones += x.weights()[i];
  }
  return Rational(BigInt(ones), BigInt(x.total()));
}

Rational correlation_exact(const PolynomialGF2& p, const std::function<bool(std::uint64_t)>& g, const Distribution& x) {
  require_arity(p, x);
  std::uint64_t agree = 0;
  for (std::size_t i = 0; i < x.support_size(); ++i) {
    if (p.evaluate(x.support()[i]) == g(x.support()[i])) agree += x.weights()[i];
  }
  return Rational(BigInt(agree), BigInt(x.total()));
}

Rational extractor_error(const std::vector<PolynomialGF2>& polys, const Distribution& x) {
  if (polys.size() > static_cast<std::size_t>(kMaxOutputBits)) throw Error(ErrorCode::OutputSpaceTooLarge, "extractor error needs t <= 20");
  for (const auto& p : polys) require_arity(p, x);
  if (polys.empty()) return Rational(0);
  return distance_to_uniform(output_weights(polys, x), x.total());
}

std::vector<Rational> hybrid_distances(const std::vector<PolynomialGF2>& polys, const Distribution& x) {
  if (polys.size() > static_cast<std::size_t>(kMaxOutputBits)) throw Error(ErrorCode::OutputSpaceTooLarge, "extractor error needs t <= 20");
  for (const auto& p : polys) require_arity(p, x);
  return hybrids_from_weights(output_weights(polys, x), polys.size(), x.total());
}

double ExperimentConfig::ell(double k, int n, double eps) { return k / 2.0 - std::log2(32.0 * n / eps); }

SuccessRateReport extractor_success_rate(const Distribution& x, int d, double eps, const ExperimentConfig& config) {
  if (!(eps > 0 && eps < 1)) throw Error(ErrorCode::OutOfRange, "eps must lie in (0, 1)");
  if (config.trials < 1 && !config.exhaustive) throw Error(ErrorCode::OutOfRange, "trials must be >= 1");
  SuccessRateReport r;
  r.n = x.n();
  r.d = d;
  r.eps = eps;
  r.min_entropy = x.min_entropy();
  r.exhaustive = config.exhaustive;

  const SupportTable table(x, d);
  // |bias - 1/2| <= eps  <=>  |2 W_1 - T| <= floor(2 eps T), W_1 integer.
  const Rational limit = Rational(eps) * 2 * x.total();
  const BigInt bound_big = numerator(limit) / denominator(limit);
  const auto bound = static_cast<std::uint64_t>(bound_big);
  const std::uint64_t total = x.total();
  auto good = [&](const PolynomialGF2& p, std::vector<std::uint64_t>& scratch) {
    table.values(p, scratch);
    const std::uint64_t w1 = table.weight_of(scratch);
    const std::uint64_t dev = 2 * w1 > total ? 2 * w1 - total : total - 2 * w1;
    return dev <= bound;
  };

  if (config.exhaustive) {
    const std::size_t count = multilinear_basis(x.n(), d).size();
    if (count > 20) throw Error(ErrorCode::SpaceTooLarge, "exhaustive mode needs binom(n, <=d) <= 20");
    std::vector<std::uint64_t> scratch;
    for_each_poly(x.n(), std::min(d, x.n()), [&](const PolynomialGF2& p) {
      ++r.trials;
      if (good(p, scratch)) ++r.successes;
    });
  } else {
    r.trials = config.trials;
    std::vector<std::uint64_t> hits(std::max<unsigned>(config.jobs, 1), 0);
    run_partitioned(config.trials, config.jobs, [&](std::uint64_t w, std::uint64_t lo, std::uint64_t hi) {
      std::vector<std::uint64_t> scratch;
      for (std::uint64_t i = lo; i < hi; ++i) {
        Rng rng(config.seed, i);
        if (good(sample_poly(x.n(), std::min(d, x.n()), rng), scratch)) ++hits[w];
      }
    });
    for (auto h : hits) r.successes += h;
  }
  r.rate = static_cast<double>(r.successes) / static_cast<double>(r.trials);

  r.ell = ExperimentConfig::ell(r.min_entropy, x.n(), eps);
  r.binom_ell = r.ell > 0 ? binom_le_double(static_cast<long long>(std::floor(r.ell)), d) : 0;
  const double n2 = static_cast<double>(x.n()) * x.n();
  r.floor = 1.0 - std::exp(3.0 * x.n() - eps * eps * r.binom_ell / (ExperimentConfig::kC * n2));
  r.vacuous = r.ell <= 0 || r.floor <= 0;
  r.margin = r.exhaustive ? 0.0 : three_sigma(r.floor, r.trials);
  r.passes = r.vacuous || r.rate >= r.floor - r.margin;
  return r;
}

json SuccessRateReport::to_json() const {
  return json{{"n", n},
              {"d", d},
              {"eps", eps},
              {"min_entropy", min_entropy},
              {"trials", trials},
              {"successes", successes},
              {"rate", rate},
              {"ell", ell},
              {"binom_ell", binom_ell},
              {"C", ExperimentConfig::kC},
              {"floor", floor},
              {"margin", margin},
              {"vacuous_floor", vacuous},
              {"exhaustive", exhaustive},
              {"passes", passes}};
}

CoveringReport covering_experiment(const PointSet& s, int ell, int d, std::uint64_t trials, std::uint64_t seed) {
  if (s.q() != 2) throw Error(ErrorCode::FieldMismatch, "covering experiment is defined over GF(2)");
  if (ell < 0 || d < 0) throw Error(ErrorCode::OutOfRange, "ell and d must be >= 0");
  if (trials < 1) throw Error(ErrorCode::OutOfRange, "trials must be >= 1");
  CoveringReport r;
  r.ell = ell;
  r.d = d;
  r.set_size = s.size();
  r.trials = trials;
  const u128 size = binom_le(static_cast<std::uint64_t>(ell), d);
  if (size > s.size()) throw Error(ErrorCode::SetTooSmall, "|S| = " + std::to_string(s.size()) + " is below binom(ell, <=d) = " + to_string(size));
  r.subset_size = static_cast<std::size_t>(size);

  const FieldSpec gf2 = make_field(2, 1);
  std::vector<std::uint64_t> included(s.size(), 0);
  std::vector<std::size_t> idx(s.size());
  std::vector<Point> pts(r.subset_size);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng(seed, trial);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < r.subset_size; ++i) {
      std::swap(idx[i], idx[i + static_cast<std::size_t>(rng.below(idx.size() - i))]);
      pts[i] = s[idx[i]];
    }
    if (hilbert_function(gf2, PointSet(2, s.dim(), pts), d) == r.subset_size) {
      ++r.full_dimension;
      for (std::size_t i = 0; i < r.subset_size; ++i) ++included[idx[i]];
    }
  }
  r.rate = static_cast<double>(r.full_dimension) / static_cast<double>(trials);
  r.delta = static_cast<double>(r.subset_size) * std::exp2(ell) / static_cast<double>(s.size());
  r.floor = 1.0 - r.delta;
  r.vacuous = r.floor <= 0;
  r.margin = three_sigma(r.floor, trials);
  r.passes = r.vacuous || r.rate >= r.floor - r.margin;

  const double base = static_cast<double>(r.subset_size) / static_cast<double>(s.size());
  r.band_lo = r.delta < 1 ? (1 - r.delta) * base : 0.0;
  r.band_hi = r.delta < 1 ? base / (1 - r.delta) : 1.0;
  if (r.full_dimension > 0) {
    std::size_t inside = 0;
    r.min_inclusion = 1.0;
    for (auto c : included) {
      const double f = static_cast<double>(c) / static_cast<double>(r.full_dimension);
      r.min_inclusion = std::min(r.min_inclusion, f);
      r.max_inclusion = std::max(r.max_inclusion, f);
      if (f >= r.band_lo && f <= r.band_hi) ++inside;
    }
    r.within_band = static_cast<double>(inside) / static_cast<double>(s.size());
  }
  return r;
}

json CoveringReport::to_json() const {
  return json{{"ell", ell},
              {"d", d},
              {"set_size", set_size},
              {"subset_size", subset_size},
              {"trials", trials},
              {"full_dimension", full_dimension},
              {"rate", rate},
              {"delta", delta},
              {"floor", floor},
              {"margin", margin},
              {"vacuous_floor", vacuous},
              {"passes", passes},
              {"inclusion", {{"band", {band_lo, band_hi}}, {"min", min_inclusion}, {"max", max_inclusion}, {"within_band", within_band}}}};
}

SourceCountKind parse_source_count_kind(const std::string& text) {
  for (auto k : {SourceCountKind::local, SourceCountKind::forest, SourceCountKind::poly, SourceCountKind::circuit}) {
    if (text == to_string(k)) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown source kind '" + text + "' (expected local, forest, poly or circuit)");
}

const char* to_string(SourceCountKind kind) noexcept {
  switch (kind) {
    case SourceCountKind::local: return "local";
    case SourceCountKind::forest: return "forest";
    case SourceCountKind::poly: return "poly";
    case SourceCountKind::circuit: return "circuit";
  }
  return "unknown";
}

SourceCountBound source_count_bounds(SourceCountKind kind, int n, int ell, std::optional<int> m) {
  if (n < 1 || ell < 0) throw Error(ErrorCode::OutOfRange, "need n >= 1 and ell >= 0");
  if ((kind == SourceCountKind::poly || kind == SourceCountKind::circuit) && (!m || *m < 0)) {
    throw Error(ErrorCode::OutOfRange, std::string(to_string(kind)) + " bound needs m >= 0");
  }
  SourceCountBound b;
  b.kind = kind;
  const double nd = n;
  const double log_n = std::log2(nd);
  const bool pow2 = std::has_single_bit(static_cast<unsigned>(n));
  const u128 ilog = static_cast<u128>(std::bit_width(static_cast<unsigned>(n)) - 1);
  auto mul = [](std::optional<u128> a, std::optional<u128> c) -> std::optional<u128> {
    u128 out = 0;
    if (!a || !c || !checked_mul(*a, *c, out)) return std::nullopt;
    return out;
  };
  auto add = [](std::optional<u128> a, std::optional<u128> c) -> std::optional<u128> {
    u128 out = 0;
    if (!a || !c || !checked_add(*a, *c, out)) return std::nullopt;
    return out;
  };
  auto power = [&mul](u128 base, int e) -> std::optional<u128> {
    std::optional<u128> acc = u128{1};
    for (int i = 0; i < e && acc; ++i) acc = mul(acc, base);
    return acc;
  };
  const std::optional<u128> un = static_cast<u128>(n);
  const std::optional<u128> ul = static_cast<u128>(ell);
  const std::optional<u128> ulog = pow2 ? std::optional<u128>(ilog) : std::nullopt;

  switch (kind) {
    case SourceCountKind::local:
      b.formula = "2^l n + 2 l n log2(n)";
      b.exponent = std::exp2(ell) * nd + 2.0 * ell * nd * log_n;
      b.exponent_exact = add(mul(power(2, ell), un), mul(mul(u128{2}, ul), mul(un, ulog)));
      break;
    case SourceCountKind::forest:
      b.formula = "(l + log2(n)) 2^(l+1) n";
      b.exponent = (ell + log_n) * std::exp2(ell + 1) * nd;
      b.exponent_exact = mul(mul(add(ul, ulog), power(2, ell + 1)), un);
      break;
    case SourceCountKind::poly: {
      b.formula = "n binom(m, <=l)";
      const double bl = binom_le_double(*m, ell);
      b.exponent = nd * bl;
      std::optional<u128> binom;
      try {
        binom = binom_le(static_cast<std::uint64_t>(*m), ell);
      } catch (const Error&) {
        binom = std::nullopt;
      }
      b.exponent_exact = mul(un, binom);
      break;
    }
    case SourceCountKind::circuit: {
      b.formula = "4 n^l (n^l + m)";
      const double nl = std::pow(nd, ell);
      b.exponent = 4.0 * nl * (nl + *m);
      const auto unl = power(static_cast<u128>(n), ell);
      b.exponent_exact = mul(mul(u128{4}, unl), add(unl, static_cast<u128>(*m)));
      break;
    }
  }
  return b;
}

json SourceCountBound::to_json() const {
  json j{{"kind", to_string(kind)}, {"formula", formula}, {"log2_bound", exponent}};
  if (exponent_exact) {
    if (*exponent_exact <= std::numeric_limits<std::uint64_t>::max()) {
      j["log2_bound_exact"] = static_cast<std::uint64_t>(*exponent_exact);
    } else {
      j["log2_bound_exact"] = hilbertkit::to_string(*exponent_exact);
    }
  } else {
    j["log2_bound_exact"] = nullptr;
  }
  return j;
}

MultiExtractorReport multi_extractor_experiment(const Distribution& x, int d, int t, double eps, const ExperimentConfig& config) {
  if (t < 1) throw Error(ErrorCode::OutOfRange, "t must be >= 1");
  if (t > kMaxOutputBits) throw Error(ErrorCode::OutputSpaceTooLarge, "extractor error needs t <= 20");
  if (!(eps > 0 && eps < 1)) throw Error(ErrorCode::OutOfRange, "eps must lie in (0, 1)");
  if (config.trials < 1) throw Error(ErrorCode::OutOfRange, "trials must be >= 1");
  MultiExtractorReport r;
  r.n = x.n();
  r.d = d;
  r.t = t;
  r.eps = eps;
  r.min_entropy = x.min_entropy();
  r.trials = config.trials;
  // t < min-entropy  <=>  T > 2^t max_weight.
  r.degenerate = x.support_size() == 1 || to_bigint(x.total()) <= (BigInt(1) << static_cast<unsigned>(t)) * x.max_weight();

  const Rational threshold = Rational(eps) * t;
  std::vector<double> errors(config.trials);
  std::vector<char> pass(config.trials, 0);
  std::vector<char> violation(config.trials, 0);
  run_partitioned(config.trials, config.jobs, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      Rng rng(config.seed, i);
      std::vector<PolynomialGF2> polys;
      for (int j = 0; j < t; ++j) polys.push_back(sample_poly(x.n(), std::min(d, x.n()), rng));
      const auto w = output_weights(polys, x);
      const Rational err = distance_to_uniform(w, x.total());
      Rational chain = 0;
      for (const auto& h : hybrids_from_weights(w, static_cast<std::size_t>(t), x.total())) chain += h;
      errors[i] = static_cast<double>(err);
      pass[i] = err <= threshold ? 1 : 0;
      violation[i] = err > chain ? 1 : 0;
    }
  });
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    r.passes += static_cast<std::uint64_t>(pass[i]);
    r.chain_violations += static_cast<std::uint64_t>(violation[i]);
    r.mean_error += errors[i];
  }
  r.mean_error /= static_cast<double>(config.trials);
  r.pass_rate = static_cast<double>(r.passes) / static_cast<double>(config.trials);
  std::sort(errors.begin(), errors.end());
  for (double q : {0.0, 0.5, 0.9, 0.99, 1.0}) {
    r.error_quantiles.push_back(errors[static_cast<std::size_t>(q * static_cast<double>(config.trials - 1))]);
  }
  return r;
}

json MultiExtractorReport::to_json() const {
  return json{{"n", n},
              {"d", d},
              {"t", t},
              {"eps", eps},
              {"min_entropy", min_entropy},
              {"trials", trials},
              {"threshold", eps * t},
              {"passes", passes},
              {"pass_rate", pass_rate},
              {"mean_error", mean_error},
              {"error_quantiles", {{"0", error_quantiles.at(0)}, {"0.5", error_quantiles.at(1)}, {"0.9", error_quantiles.at(2)}, {"0.99", error_quantiles.at(3)}, {"1", error_quantiles.at(4)}}},
              {"chain_violations", chain_violations},
              {"degenerate", degenerate},
              {"exhaustive", exhaustive}};
}

}  // namespace hilbertkit
