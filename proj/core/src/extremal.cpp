#include "hilbertkit/extremal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include "hilbertkit/echelon.hpp"
#include "hilbertkit/error.hpp"
#include "hilbertkit/hilbert.hpp"
#include "hilbertkit/io.hpp"

namespace hilbertkit {

namespace {

using json = nlohmann::json;

json to_json(const ExponentVector& x) { return json(x.e); }

json to_json(const GridSet& set) {
  json out = json::array();
  for (const auto& x : set) out.push_back(to_json(x));
  return out;
}

// Grid elements indexed by lex rank, with lower and upper covers as masks.
struct SmallPoset {
  std::vector<ExponentVector> elems;
  std::vector<std::uint64_t> lower;
  std::vector<std::uint64_t> upper;
  std::vector<int> weight;
};

SmallPoset small_poset(const GridShape& shape) {
  if (shape.size() > 64) throw Error(ErrorCode::GridTooLarge, "mask enumeration needs |F| <= 64");
  SmallPoset p;
  p.elems = lex_prefix(shape, shape.size());
  const std::size_t n = p.elems.size();
  p.lower.assign(n, 0);
  p.upper.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    ExponentVector y = p.elems[r];
    p.weight.push_back(y.weight());
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      --y[i];
      const auto s = static_cast<std::size_t>(lex_rank(shape, y));
      ++y[i];
      p.lower[r] |= std::uint64_t{1} << s;
      p.upper[s] |= std::uint64_t{1} << r;
    }
  }
  return p;
}

GridSet mask_to_set(const SmallPoset& p, std::uint64_t mask) {
  GridSet out;
  for (std::size_t r = 0; r < p.elems.size(); ++r) {
    if (mask >> r & 1U) out.push_back(p.elems[r]);
  }
  return out;
}

// Up-closure of a mask: covers have larger rank, one ascending pass suffices.
std::uint64_t up_mask(const SmallPoset& p, std::uint64_t mask) {
  for (std::size_t r = 0; r < p.elems.size(); ++r) {
    if (mask >> r & 1U) mask |= p.upper[r];
  }
  return mask;
}

std::uint64_t low_mask(const SmallPoset& p, long long d) {
  std::uint64_t m = 0;
  for (std::size_t r = 0; r < p.elems.size(); ++r) {
    if (p.weight[r] <= d) m |= std::uint64_t{1} << r;
  }
  return m;
}

void require_enumerable(const GridShape& shape) {
  if (shape.size() > kMaxEnumerationGrid) {
    throw Error(ErrorCode::GridTooLarge, "down-closed enumeration is capped at |F| <= " + std::to_string(kMaxEnumerationGrid));
  }
}

// h_S(d) for every d in 0..max_deg: greedy column insertion in graded order,
// recording the rank after each degree block. This is column rank of the
// degree-<=d evaluation matrix, so it is h_S(d) directly.
class HilbertProfiler {
 public:
  HilbertProfiler(const FieldSpec& field, int n)
      : field_(field), space_(PointSet::full_space(field.order(), n)) {
    const int q = static_cast<int>(field.order());
    max_deg_ = static_cast<long long>(n) * (q - 1);
    monomials_ = reduced_monomials(n, q - 1, max_deg_, MonomialOrder::grlex);
    values_.resize(monomials_.size() * space_.size());
    std::vector<FieldElement> row;
    const PowerTable pow(field);
    for (std::size_t i = 0; i < space_.size(); ++i) {
      pow.eval(space_[i], monomials_, row);
      for (std::size_t j = 0; j < monomials_.size(); ++j) values_[j * space_.size() + i] = row[j];
    }
  }

  long long max_degree() const noexcept { return max_deg_; }
  const PointSet& space() const noexcept { return space_; }

  // `members` are indices into space(); result[d] = h_S(d).
  std::vector<std::size_t> profile(const std::vector<std::size_t>& members) const {
    std::vector<std::size_t> h(static_cast<std::size_t>(max_deg_) + 1, members.size());
    if (members.empty()) return h;
    EchelonBasis basis(field_, members.size());
    std::vector<FieldElement> column(members.size());
    int current = 0;
    for (std::size_t j = 0; j < monomials_.size(); ++j) {
      const int deg = monomials_[j].weight();
      while (current < deg) h[static_cast<std::size_t>(current++)] = basis.rank();
      for (std::size_t i = 0; i < members.size(); ++i) column[i] = values_[j * space_.size() + members[i]];
      basis.insert(column);
      if (basis.full()) return fill_from(h, current, members.size());
    }
    return fill_from(h, current, basis.rank());
  }

 private:
  static std::vector<std::size_t> fill_from(std::vector<std::size_t> h, int from, std::size_t value) {
    for (std::size_t d = static_cast<std::size_t>(from); d < h.size(); ++d) h[d] = value;
    return h;
  }

  FieldSpec field_;
  PointSet space_;
  long long max_deg_ = 0;
  std::vector<Monomial> monomials_;
  std::vector<FieldElement> values_;
};

}  // namespace

json VerificationReport::to_json() const {
  return json{{"claim", claim},
              {"params", params},
              {"instances_checked", instances_checked},
              {"exhaustive", exhaustive},
              {"passed", passed()},
              {"counterexample", counterexample ? *counterexample : json(nullptr)}};
}

void for_each_down_closed_mask(const GridShape& shape, std::optional<std::size_t> size,
                               const std::function<void(std::uint64_t)>& visit) {
  const SmallPoset p = small_poset(shape);
  const std::size_t n = p.elems.size();
  auto dfs = [&](auto&& self, std::size_t r, std::uint64_t mask, std::size_t count) -> void {
    if (size && count + (n - r) < *size) return;
    if (r == n) {
      if (!size || count == *size) visit(mask);
      return;
    }
    self(self, r + 1, mask, count);
    if ((p.lower[r] & mask) == p.lower[r] && (!size || count < *size)) {
      self(self, r + 1, mask | std::uint64_t{1} << r, count + 1);
    }
  };
  dfs(dfs, 0, 0, 0);
}

std::vector<GridSet> enumerate_down_closed(const GridShape& shape, std::size_t k) {
  require_enumerable(shape);
  const SmallPoset p = small_poset(shape);
  std::vector<GridSet> out;
  for_each_down_closed_mask(shape, k, [&](std::uint64_t mask) { out.push_back(mask_to_set(p, mask)); });
  return out;
}

std::size_t brute_min_low_weight(const GridShape& shape, long long d, std::size_t k) {
  require_enumerable(shape);
  if (k > shape.size()) throw Error(ErrorCode::OutOfRange, "k exceeds grid size");
  const std::uint64_t low = low_mask(small_poset(shape), d);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_down_closed_mask(shape, k, [&](std::uint64_t mask) {
    best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask & low)));
  });
  return best;
}

SubsetMinimum brute_min_hilbert_subsets(const FieldSpec& field, int n, long long d, std::size_t k,
                                        bool require_exhaustive, std::uint64_t samples, std::uint64_t seed) {
  if (d < 0) throw Error(ErrorCode::OutOfRange, "degree must be >= 0");
  const GridShape cube = GridShape::hypercube(static_cast<int>(field.order()), n);
  if (k > cube.size()) throw Error(ErrorCode::OutOfRange, "k exceeds q^n");
  const bool exhaustive = cube.size() <= 16;
  if (!exhaustive && require_exhaustive) throw Error(ErrorCode::SpaceTooLarge, "exhaustive subset search needs q^n <= 16");

  SubsetMinimum result;
  result.exhaustive = exhaustive;
  result.minimum = std::numeric_limits<std::size_t>::max();
  if (k == 0) {
    result.minimum = 0;
    return result;
  }
  const auto floor = static_cast<std::size_t>(min_hilbert(cube, d, k));
  const PointSet space = PointSet::full_space(field.order(), n);
  auto consider = [&](const std::vector<Point>& pts) {
    ++result.subsets_checked;
    result.minimum = std::min(result.minimum, hilbert_function(field, PointSet(field.order(), n, pts), d));
    return result.minimum <= floor;
  };

  std::vector<Point> pts(k);
  if (exhaustive) {
    const auto total = static_cast<unsigned>(space.size());
    // Gosper's hack over k-subsets of the q^n points.
    for (std::uint32_t mask = (std::uint32_t{1} << k) - 1; mask < (std::uint32_t{1} << total);) {
      std::size_t j = 0;
      for (unsigned i = 0; i < total; ++i) {
        if (mask >> i & 1U) pts[j++] = space[i];
      }
      if (consider(pts)) break;
      const std::uint32_t c = mask & -mask;
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    return result;
  }

  std::mt19937_64 gen(seed);
  std::vector<std::size_t> idx(space.size());
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
      std::swap(idx[i], idx[pick(gen)]);
      pts[i] = space[idx[i]];
    }
    if (consider(pts)) break;
  }
  return result;
}

VerificationReport verify_general_bd(const GridShape& shape) {
  require_enumerable(shape);
  VerificationReport report;
  report.claim = "general-bd";
  report.params = json{{"shape", shape.radices()}};
  const SmallPoset p = small_poset(shape);
  const std::size_t size = p.elems.size();
  const auto max_w = static_cast<std::size_t>(shape.max_weight());

  // best[k][d] = min |T_{<=d}| over down-closed T with |T| = k.
  std::vector<std::vector<std::size_t>> best(size + 1, std::vector<std::size_t>(max_w + 1, std::numeric_limits<std::size_t>::max()));
  std::vector<std::size_t> hist(max_w + 1);
  for_each_down_closed_mask(shape, std::nullopt, [&](std::uint64_t mask) {
    std::fill(hist.begin(), hist.end(), 0);
    for (std::size_t r = 0; r < size; ++r) {
      if (mask >> r & 1U) ++hist[static_cast<std::size_t>(p.weight[r])];
    }
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    std::size_t cum = 0;
    for (std::size_t d = 0; d <= max_w; ++d) {
      cum += hist[d];
      best[k][d] = std::min(best[k][d], cum);
    }
  });

  for (std::size_t k = 0; k <= size; ++k) {
    for (std::size_t d = 0; d <= max_w; ++d) {
      ++report.instances_checked;
      const u128 formula = min_hilbert(shape, static_cast<long long>(d), k);
      if (formula != best[k][d] && !report.counterexample) {
        report.counterexample = json{{"shape", shape.radices()}, {"d", d}, {"k", k}, {"brute", best[k][d]}, {"formula", u128_json(formula)}};
      }
    }
  }
  return report;
}

VerificationReport verify_characterization(const FieldSpec& field, int n) {
  const GridShape cube = GridShape::hypercube(static_cast<int>(field.order()), n);
  if (cube.size() > 16) throw Error(ErrorCode::SpaceTooLarge, "exhaustive subset search needs q^n <= 16");
  VerificationReport report;
  report.claim = "characterization";
  report.params = json{{"q", field.order()}, {"n", n}};

  const HilbertProfiler profiler(field, n);
  const std::size_t total = profiler.space().size();
  const auto max_d = static_cast<std::size_t>(profiler.max_degree());
  std::vector<std::vector<std::size_t>> best(total + 1, std::vector<std::size_t>(max_d + 1, std::numeric_limits<std::size_t>::max()));
  std::vector<std::size_t> members;
  std::uint64_t subsets = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << total); ++mask) {
    members.clear();
    for (std::size_t i = 0; i < total; ++i) {
      if (mask >> i & 1U) members.push_back(i);
    }
    const auto h = profiler.profile(members);
    for (std::size_t d = 0; d <= max_d; ++d) best[members.size()][d] = std::min(best[members.size()][d], h[d]);
    ++subsets;
  }
  report.params["subsets"] = subsets;

  for (std::size_t k = 0; k <= total; ++k) {
    for (std::size_t d = 0; d <= max_d; ++d) {
      ++report.instances_checked;
      const u128 formula = min_hilbert(cube, static_cast<long long>(d), k);
      if (formula != best[k][d] && !report.counterexample) {
        report.counterexample = json{{"q", field.order()}, {"n", n}, {"d", d}, {"k", k}, {"subset_minimum", best[k][d]}, {"formula", u128_json(formula)}};
      }
    }
  }
  return report;
}

VerificationReport verify_contiguous_lemmas(int n, std::optional<long long> d) {
  if (n < 0 || n > 16) throw Error(ErrorCode::OutOfRange, "contiguous lemmas are checked for 0 <= n <= 16");
  VerificationReport report;
  report.claim = "contiguous";
  report.params = json{{"n", n}};
  if (d) report.params["d"] = *d;

  const std::size_t size = std::size_t{1} << n;
  const long long d_lo = d ? *d : 0;
  const long long d_hi = d ? *d : n;
  // prefix[c][r]: elements of rank < r with weight <= c - 1 (row 0 is all zero).
  std::vector<std::vector<std::uint32_t>> prefix(static_cast<std::size_t>(n) + 2, std::vector<std::uint32_t>(size + 1, 0));
  for (std::size_t c = 1; c < prefix.size(); ++c) {
    for (std::size_t r = 0; r < size; ++r) {
      prefix[c][r + 1] = prefix[c][r] + (std::popcount(r) <= static_cast<int>(c) - 1 ? 1U : 0U);
    }
  }
  auto count = [&](long long deg, std::size_t lo, std::size_t hi) -> std::uint32_t {
    if (deg < 0) return 0;
    const auto& row = prefix[static_cast<std::size_t>(std::min<long long>(deg, n)) + 1];
    return row[hi] - row[lo];
  };

  for (long long deg = d_lo; deg <= d_hi; ++deg) {
    for (std::size_t k = 1; k <= size; ++k) {
      const std::uint32_t m_d = count(deg, 0, k);
      const std::uint32_t m_d1 = count(deg - 1, 0, k);
      for (std::size_t start = 0; start + k <= size; ++start) {
        const std::uint32_t s_d = count(deg, start, start + k);
        ++report.instances_checked;
        if (m_d < s_d && !report.counterexample) {
          report.counterexample = json{{"lemma", "prefix-dominates"}, {"n", n}, {"d", deg}, {"k", k}, {"start", start}, {"prefix", m_d}, {"contiguous", s_d}};
        }
        // Disjoint from M(k) exactly when the block starts at or after rank k.
        if (start >= k) {
          ++report.instances_checked;
          if (m_d1 < s_d && !report.counterexample) {
            report.counterexample = json{{"lemma", "disjoint-shift"}, {"n", n}, {"d", deg}, {"k", k}, {"start", start}, {"prefix_below", m_d1}, {"contiguous", s_d}};
          }
        }
      }
    }
  }
  return report;
}

VerificationReport verify_delta_lemmas(const GridShape& shape, long long d, std::uint64_t max_instances) {
  if (shape.size() > 4096) throw Error(ErrorCode::GridTooLarge, "delta lemmas are checked for |F| <= 4096");
  if (d < 0) throw Error(ErrorCode::OutOfRange, "degree must be >= 0");
  VerificationReport report;
  report.claim = "delta";
  report.params = json{{"shape", shape.radices()}, {"d", d}};

  const GridSet low = low_weight_elements(shape, d);
  const std::size_t m = low.size();
  // Lower covers inside F_{<=d}; F_{<=d} is itself down-closed.
  std::vector<std::vector<std::size_t>> lower(m);
  for (std::size_t i = 0; i < m; ++i) {
    ExponentVector y = low[i];
    for (std::size_t c = 0; c < y.size(); ++c) {
      if (y[c] == 0) continue;
      --y[c];
      lower[i].push_back(static_cast<std::size_t>(std::lower_bound(low.begin(), low.end(), y) - low.begin()));
      ++y[c];
    }
  }

  // Brute-force cross-check of maximality on small grids: group every
  // down-closed U by its degree-<=d part.
  std::optional<SmallPoset> small;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> all_down;  // (U, U_{<=d})
  std::uint64_t low_bits = 0;
  if (shape.size() <= kMaxEnumerationGrid) {
    small = small_poset(shape);
    low_bits = low_mask(*small, d);
    for_each_down_closed_mask(shape, std::nullopt, [&](std::uint64_t u) { all_down.emplace_back(u, u & low_bits); });
  }
  auto to_mask = [&](const GridSet& set) {
    std::uint64_t mask = 0;
    for (const auto& x : set) mask |= std::uint64_t{1} << static_cast<std::size_t>(lex_rank(shape, x));
    return mask;
  };
  auto fail = [&](json why) {
    if (!report.counterexample) report.counterexample = std::move(why);
  };

  std::vector<char> in_t(m, 0);
  std::uint64_t sets_seen = 0;
  auto check_t = [&]() {
    if (++sets_seen > max_instances) {
      throw Error(ErrorCode::GridTooLarge, "more than " + std::to_string(max_instances) + " down-closed subsets of F_{<=d}");
    }
    ++report.instances_checked;
    GridSet t;
    GridSet s;
    for (std::size_t i = 0; i < m; ++i) (in_t[i] ? t : s).push_back(low[i]);
    const GridSet dl = delta(shape, s);
    if (!is_down_closed(shape, dl)) fail(json{{"T", to_json(t)}, {"issue", "Delta not down-closed"}});
    GridSet dl_low;
    for (const auto& x : dl) {
      if (x.weight() <= d) dl_low.push_back(x);
    }
    if (dl_low != t) fail(json{{"T", to_json(t)}, {"issue", "Delta_{<=d} differs from T"}});
    // Every y outside Delta dominates some element of S, so no down-closed
    // set with degree-<=d part T can contain y.
    ExponentVector y(std::vector<int>(static_cast<std::size_t>(shape.dim()), 0));
    std::size_t in_delta = 0;
    for (u128 r = 0; r < shape.size(); ++r) {
      y = lex_unrank(shape, r);
      if (in_delta < dl.size() && dl[in_delta] == y) {
        ++in_delta;
        continue;
      }
      const bool dominates = std::any_of(s.begin(), s.end(), [&](const ExponentVector& b) {
        for (std::size_t c = 0; c < b.size(); ++c) {
          if (b[c] > y[c]) return false;
        }
        return true;
      });
      if (!dominates) fail(json{{"T", to_json(t)}, {"issue", "element outside Delta not above S"}, {"y", to_json(y)}});
    }
    if (small) {
      const std::uint64_t dmask = to_mask(dl);
      const std::uint64_t tmask = to_mask(t);
      for (const auto& [u, u_low] : all_down) {
        if (u_low == tmask && (u & ~dmask) != 0) {
          fail(json{{"T", to_json(t)}, {"issue", "down-closed U with U_{<=d} = T not inside Delta"}, {"U", to_json(mask_to_set(*small, u))}});
        }
      }
    }
  };

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      check_t();
      return;
    }
    in_t[i] = 0;
    self(self, i + 1);
    if (std::all_of(lower[i].begin(), lower[i].end(), [&](std::size_t j) { return in_t[j] != 0; })) {
      in_t[i] = 1;
      self(self, i + 1);
      in_t[i] = 0;
    }
  };
  dfs(dfs, 0);

  for (std::size_t r = 0; r <= m; ++r) {
    ++report.instances_checked;
    const GridSet dl = delta(shape, lex_last_low_weight(shape, d, r));
    bool prefix = true;
    for (std::size_t i = 0; i < dl.size() && prefix; ++i) prefix = lex_rank(shape, dl[i]) == i;
    const auto low_part = static_cast<std::size_t>(std::count_if(dl.begin(), dl.end(), [d](const ExponentVector& x) { return x.weight() <= d; }));
    if (!prefix) fail(json{{"r", r}, {"issue", "Delta(L_{<=d}(r)) is not a lex prefix"}, {"delta", to_json(dl)}});
    if (low_part != m - r) fail(json{{"r", r}, {"issue", "Delta(L_{<=d}(r)) has the wrong degree-<=d part"}, {"delta", to_json(dl)}});
  }
  return report;
}

VerificationReport verify_bd_small(const GridShape& shape, std::optional<long long> d) {
  VerificationReport report;
  report.claim = "bd-small";
  report.params = json{{"shape", shape.radices()}};
  if (d) report.params["d"] = *d;
  const SmallPoset p = small_poset(shape);
  const long long d_lo = d ? *d : 0;
  const long long d_hi = d ? *d : shape.max_weight();

  for (long long deg = d_lo; deg <= d_hi; ++deg) {
    std::vector<std::size_t> low;
    for (std::size_t r = 0; r < p.elems.size(); ++r) {
      if (p.weight[r] <= deg) low.push_back(r);
    }
    if (low.size() > kMaxEnumerationGrid) throw Error(ErrorCode::GridTooLarge, "|F_{<=d}| exceeds 24");
    // The r lex-greatest low-weight elements are the last r entries of `low`.
    std::vector<std::size_t> extremal_size(low.size() + 1);
    for (std::size_t r = 0; r <= low.size(); ++r) {
      std::uint64_t mask = 0;
      for (std::size_t i = low.size() - r; i < low.size(); ++i) mask |= std::uint64_t{1} << low[i];
      extremal_size[r] = static_cast<std::size_t>(std::popcount(up_mask(p, mask)));
    }
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << low.size()); ++sub) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < low.size(); ++i) {
        if (sub >> i & 1U) mask |= std::uint64_t{1} << low[i];
      }
      const auto r = static_cast<std::size_t>(std::popcount(sub));
      const auto up = static_cast<std::size_t>(std::popcount(up_mask(p, mask)));
      ++report.instances_checked;
      if (up < extremal_size[r] && !report.counterexample) {
        report.counterexample = json{{"shape", shape.radices()}, {"d", deg}, {"S", to_json(mask_to_set(p, mask))}, {"up_closure_size", up}, {"extremal_up_closure_size", extremal_size[r]}};
      }
    }
  }
  return report;
}

}  // namespace hilbertkit
