#include "hilbertkit/closure.hpp"

#include <algorithm>
#include <thread>

#include "hilbertkit/echelon.hpp"
#include "hilbertkit/error.hpp"

namespace hilbertkit {

namespace {

u128 checked_power(std::uint32_t q, int n) {
  u128 total = 1;
  for (int i = 0; i < n; ++i) {
    if (!checked_mul(total, q, total)) throw Error(ErrorCode::OutOfRange, "q^n overflows 128 bits");
  }
  return total;
}

}  // namespace

ClosureEngine::ClosureEngine(FieldSpec field, int n, long long d)
    : field_(std::move(field)), n_(n), d_(d), space_(checked_power(field_.order(), n)), pow_(field_) {
  if (d < 0) throw Error(ErrorCode::OutOfRange, "degree must be >= 0");
  if (space_ > kMaxClosureSpace) throw Error(ErrorCode::SpaceTooLarge, "q^n exceeds 2^24; closure needs a full-space scan");
  monomials_ = reduced_monomials(n, static_cast<int>(field_.order()) - 1, d);
}

PointSet ClosureEngine::closure(const PointSet& t, unsigned jobs) const {
  t.require_field(field_);
  if (t.dim() != n_) throw Error(ErrorCode::FieldMismatch, "point set dimension differs from the closure space");
  const std::uint32_t q = field_.order();
  if (t.empty()) return PointSet(q, n_);

  EchelonBasis basis(field_, monomials_.size());
  std::vector<FieldElement> row;
  for (const auto& x : t) {
    pow_.eval(x, monomials_, row);
    basis.insert(row);
    if (basis.full()) return PointSet::full_space(q, n_);
  }

  const auto total = static_cast<std::uint64_t>(space_);
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(1, total / 4096));
  std::vector<std::vector<Point>> found(workers);
  auto scan = [&](std::uint64_t w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    std::vector<FieldElement> r;
    for (std::uint64_t k = lo; k < hi; ++k) {
      Point a = point_unrank(q, n_, k);
      pow_.eval(a, monomials_, r);
      if (basis.in_span(r)) found[w].push_back(std::move(a));
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& th : pool) th.join();
  }
  std::vector<Point> all;
  for (auto& part : found) all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return PointSet(q, n_, std::move(all));
}

PointSet closure(const FieldSpec& field, const PointSet& t, long long d, unsigned jobs) {
  return ClosureEngine(field, t.dim(), d).closure(t, jobs);
}

u128 closure_size_bound(std::uint32_t q, int n, long long d, u128 m) {
  const GridShape shape = GridShape::hypercube(static_cast<int>(q), n);
  if (m > shape.size()) throw Error(ErrorCode::OutOfRange, "m exceeds q^n");
  if (count_low_weight_prefix(shape, shape.size(), d) <= m) return shape.size();
  // f(lo) <= m < f(hi); f is nondecreasing in k.
  u128 lo = 0;
  u128 hi = shape.size();
  while (hi - lo > 1) {
    const u128 mid = lo + (hi - lo) / 2;
    if (count_low_weight_prefix(shape, mid, d) <= m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

PointSet tight_closure_set(const GridEmbedding& embedding, long long d, u128 m) {
  const FieldSpec& field = embedding.field();
  const std::uint32_t q = field.order();
  const GridShape& shape = embedding.shape();
  const int n = shape.dim();
  for (int r : shape.radices()) {
    if (static_cast<std::uint32_t>(r) != q) throw Error(ErrorCode::PreconditionViolated, "tight set needs an embedding onto all of F_q^n");
  }
  if (m > shape.size()) throw Error(ErrorCode::OutOfRange, "m exceeds q^n");
  if (shape.size() > kMaxClosureSpace) throw Error(ErrorCode::SpaceTooLarge, "q^n exceeds 2^24");

  const u128 k = closure_size_bound(q, n, d, m);
  GridSet core;
  for (auto& x : low_weight_elements(shape, d)) {
    if (lex_rank(shape, x) < k) core.push_back(std::move(x));
  }
  const PointSet t0 = embedding.embed(core);
  std::vector<Point> pts = t0.points();
  for (u128 r = 0; r < shape.size() && pts.size() < m; ++r) {
    Point a = point_unrank(q, n, r);
    if (!t0.contains(a)) pts.push_back(std::move(a));
  }
  return PointSet(q, n, std::move(pts));
}

Rational nie_wang_bound(std::uint32_t q, int n, long long d, u128 m) {
  const u128 denom = monomial_count(n, d, static_cast<int>(q) - 1);
  if (denom == 0) throw Error(ErrorCode::OutOfRange, "degree must be >= 0");
  return Rational(to_bigint(checked_power(q, n)) * to_bigint(m), to_bigint(denom));
}

bool closure_exponent_check(const FieldSpec& field, int ell, long long d, const PointSet& t, unsigned jobs) {
  const u128 limit = monomial_count(ell, d, static_cast<int>(field.order()) - 1);
  if (static_cast<u128>(t.size()) >= limit) {
    throw Error(ErrorCode::PreconditionViolated, "|T| must be below N(ell, d, q-1) = " + to_string(limit));
  }
  const PointSet cl = closure(field, t, d, jobs);
  return static_cast<u128>(cl.size()) < checked_power(field.order(), ell);
}

ClosureResult closure_report(const FieldSpec& field, const PointSet& t, long long d, unsigned jobs) {
  ClosureResult r{closure(field, t, d, jobs), t.size(), 0, 0};
  r.bound_tight = closure_size_bound(field.order(), t.dim(), d, r.input_size);
  r.bound_nie_wang = nie_wang_bound(field.order(), t.dim(), d, r.input_size);
  return r;
}

}  // namespace hilbertkit
