#include "hilbertkit/grid.hpp"

#include <algorithm>
#include <numeric>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

namespace {

constexpr u128 kMaxMaterialized = u128{1} << 24;
constexpr u128 kMaxBitmap = u128{1} << 26;
constexpr std::size_t kMaxDpCells = std::size_t{1} << 24;

void increment(const GridShape& shape, ExponentVector& x) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (++x.e[i] < shape.radix(i)) return;
    x.e[i] = 0;
  }
}

void require_bitmap(const GridShape& shape) {
  if (shape.size() > kMaxBitmap) throw Error(ErrorCode::GridTooLarge, "grid exceeds 2^26 elements");
}

void collect_low_weight(const GridShape& shape, long long budget, std::size_t i, ExponentVector& x, GridSet& out) {
  if (i == x.size()) {
    if (out.size() >= kMaxMaterialized) throw Error(ErrorCode::SpaceTooLarge, "F_{<=d} exceeds 2^24 elements");
    out.push_back(x);
    return;
  }
  const long long top = std::min<long long>(shape.radix(i) - 1, budget);
  for (long long v = 0; v <= top; ++v) {
    x.e[i] = static_cast<int>(v);
    collect_low_weight(shape, budget - v, i + 1, x, out);
  }
  x.e[i] = 0;
}

}  // namespace

int ExponentVector::weight() const noexcept { return std::accumulate(e.begin(), e.end(), 0); }

GridShape::GridShape(std::vector<int> radices) : r_(std::move(radices)) {
  for (int r : r_) {
    if (r < 1) throw Error(ErrorCode::OutOfRange, "grid radix must be >= 1");
    if (!checked_mul(size_, static_cast<u128>(r), size_) || size_ >> 127 != 0) {
      throw Error(ErrorCode::OutOfRange, "grid size does not fit 127 bits");
    }
  }
}

GridShape GridShape::hypercube(int q, int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative dimension");
  return GridShape(std::vector<int>(static_cast<std::size_t>(n), q));
}

long long GridShape::max_weight() const noexcept {
  long long w = 0;
  for (int r : r_) w += r - 1;
  return w;
}

bool GridShape::contains(const ExponentVector& x) const noexcept {
  if (x.size() != r_.size()) return false;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (x.e[i] < 0 || x.e[i] >= r_[i]) return false;
  }
  return true;
}

void GridShape::require(const ExponentVector& x) const {
  if (!contains(x)) throw Error(ErrorCode::ElementOutsideGrid, "element not in grid");
}

GridShape GridShape::sorted() const {
  auto r = r_;
  std::sort(r.begin(), r.end());
  return GridShape(std::move(r));
}

u128 lex_rank(const GridShape& shape, const ExponentVector& x) {
  if (!shape.contains(x)) throw Error(ErrorCode::OutOfRange, "element not in grid");
  u128 k = 0;
  for (std::size_t i = 0; i < x.size(); ++i) k = k * static_cast<u128>(shape.radix(i)) + static_cast<u128>(x.e[i]);
  return k;
}

ExponentVector lex_unrank(const GridShape& shape, u128 k) {
  if (k >= shape.size()) throw Error(ErrorCode::OutOfRange, "rank " + to_string(k) + " >= grid size");
  ExponentVector x(std::vector<int>(static_cast<std::size_t>(shape.dim()), 0));
  for (std::size_t i = x.size(); i-- > 0;) {
    const auto r = static_cast<u128>(shape.radix(i));
    x.e[i] = static_cast<int>(k % r);
    k /= r;
  }
  return x;
}

GridSet lex_prefix(const GridShape& shape, u128 k) {
  if (k > shape.size()) throw Error(ErrorCode::OutOfRange, "k exceeds grid size");
  if (k > kMaxMaterialized) throw Error(ErrorCode::SpaceTooLarge, "lex prefix exceeds 2^24 elements");
  GridSet out;
  out.reserve(static_cast<std::size_t>(k));
  ExponentVector x(std::vector<int>(static_cast<std::size_t>(shape.dim()), 0));
  for (u128 i = 0; i < k; ++i) {
    out.push_back(x);
    increment(shape, x);
  }
  return out;
}

u128 count_low_weight_prefix(const GridShape& shape, u128 k, long long d) {
  if (k > shape.size()) throw Error(ErrorCode::OutOfRange, "k exceeds grid size");
  if (d < 0) throw Error(ErrorCode::OutOfRange, "degree must be >= 0");
  if (d >= shape.max_weight() || k == 0) return k;

  const std::size_t n = static_cast<std::size_t>(shape.dim());
  const std::size_t width = static_cast<std::size_t>(d) + 1;
  if ((n + 1) * width > kMaxDpCells) throw Error(ErrorCode::SpaceTooLarge, "digit DP table too large");

  // below[j][b]: number of tails (x_j..x_{n-1}) of weight <= b.
  std::vector<u128> below((n + 1) * width, 0);
  auto at = [&](std::size_t j, long long b) -> u128& { return below[j * width + static_cast<std::size_t>(b)]; };
  for (long long b = 0; b <= d; ++b) at(n, b) = 1;
  for (std::size_t j = n; j-- > 0;) {
    const long long r = shape.radix(j);
    // below[j][b] = sum_{v=0}^{min(r-1,b)} below[j+1][b-v], as a sliding window.
    u128 window = 0;
    for (long long b = 0; b <= d; ++b) {
      window += at(j + 1, b);
      if (b - r >= 0) window -= at(j + 1, b - r);
      at(j, b) = window;
    }
  }

  if (k == shape.size()) return at(0, d);

  // Elements strictly below x = unrank(k): agree with x on a prefix, then smaller.
  const ExponentVector x = lex_unrank(shape, k);
  u128 count = 0;
  long long prefix_weight = 0;
  for (std::size_t i = 0; i < n && prefix_weight <= d; ++i) {
    const long long top = std::min<long long>(x.e[i] - 1, d - prefix_weight);
    for (long long v = 0; v <= top; ++v) count += at(i + 1, d - prefix_weight - v);
    prefix_weight += x.e[i];
  }
  return count;
}

u128 min_hilbert(const GridShape& shape, long long d, u128 k) { return count_low_weight_prefix(shape.sorted(), k, d); }

GridSet low_weight_elements(const GridShape& shape, long long d) {
  GridSet out;
  if (d < 0) return out;
  ExponentVector x(std::vector<int>(static_cast<std::size_t>(shape.dim()), 0));
  collect_low_weight(shape, d, 0, x, out);
  return out;
}

bool is_down_closed(const GridShape& shape, const GridSet& set) {
  for (const auto& x : set) {
    if (!shape.contains(x)) return false;
    ExponentVector y = x;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y.e[i] == 0) continue;
      --y.e[i];
      const bool present = std::binary_search(set.begin(), set.end(), y);
      ++y.e[i];
      if (!present) return false;
    }
  }
  return true;
}

GridSet make_grid_set(const GridShape& shape, std::vector<ExponentVector> elems) {
  for (const auto& x : elems) shape.require(x);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

DownClosedSet::DownClosedSet(const GridShape& shape, std::vector<ExponentVector> elems)
    : elems_(make_grid_set(shape, std::move(elems))) {
  if (!is_down_closed(shape, elems_)) throw Error(ErrorCode::PreconditionViolated, "set is not down-closed");
}

GridSet up_closure(const GridShape& shape, const GridSet& s) {
  require_bitmap(shape);
  const auto size = static_cast<std::size_t>(shape.size());
  std::vector<char> mark(size, 0);
  for (const auto& x : s) {
    if (!shape.contains(x)) throw Error(ErrorCode::ElementOutsideGrid, "element not in grid");
    mark[static_cast<std::size_t>(lex_rank(shape, x))] = 1;
  }
  const std::size_t n = static_cast<std::size_t>(shape.dim());
  // stride[i]: rank increment for x + e_i.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * static_cast<std::size_t>(shape.radix(i));

  // Covers have larger rank, so one ascending pass propagates everything.
  GridSet out;
  ExponentVector x(std::vector<int>(n, 0));
  for (std::size_t r = 0; r < size; ++r, increment(shape, x)) {
    if (!mark[r]) continue;
    out.push_back(x);
    for (std::size_t i = 0; i < n; ++i) {
      if (x.e[i] + 1 < shape.radix(i)) mark[r + stride[i]] = 1;
    }
  }
  return out;
}

GridSet delta(const GridShape& shape, const GridSet& s) {
  const GridSet up = up_closure(shape, s);
  GridSet out;
  out.reserve(static_cast<std::size_t>(shape.size()) - up.size());
  ExponentVector x(std::vector<int>(static_cast<std::size_t>(shape.dim()), 0));
  auto it = up.begin();
  for (u128 r = 0; r < shape.size(); ++r, increment(shape, x)) {
    if (it != up.end() && *it == x) {
      ++it;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

GridSet lex_last_low_weight(const GridShape& shape, long long d, u128 r) {
  GridSet low = low_weight_elements(shape, d);
  if (r > low.size()) throw Error(ErrorCode::OutOfRange, "r exceeds |F_{<=d}|");
  low.erase(low.begin(), low.end() - static_cast<std::ptrdiff_t>(r));
  return low;
}

GridEmbedding::GridEmbedding(FieldSpec field, GridShape shape, std::vector<std::vector<FieldElement>> points)
    : field_(std::move(field)), shape_(std::move(shape)), points_(std::move(points)) {
  if (static_cast<int>(points_.size()) != shape_.dim()) {
    throw Error(ErrorCode::PreconditionViolated, "embedding needs one point list per coordinate");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto& a = points_[i];
    if (static_cast<int>(a.size()) != shape_.radix(i)) {
      throw Error(ErrorCode::PreconditionViolated, "coordinate " + std::to_string(i) + " needs " + std::to_string(shape_.radix(i)) + " points");
    }
    for (const auto& c : a) {
      if (c.value >= field_.order()) throw Error(ErrorCode::FieldMismatch, "embedding point outside the field");
    }
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::PreconditionViolated, "embedding points of coordinate " + std::to_string(i) + " are not distinct");
    }
  }
}

GridEmbedding GridEmbedding::canonical(const FieldSpec& field, const GridShape& shape) {
  std::vector<std::vector<FieldElement>> pts;
  for (int r : shape.radices()) {
    if (static_cast<std::uint32_t>(r) > field.order()) {
      throw Error(ErrorCode::PreconditionViolated, "radix exceeds the field order");
    }
    std::vector<FieldElement> a;
    for (int j = 0; j < r; ++j) a.push_back(field.element(static_cast<std::uint32_t>(j)));
    pts.push_back(std::move(a));
  }
  return GridEmbedding(field, shape, std::move(pts));
}

Point GridEmbedding::embed(const ExponentVector& x) const {
  if (!shape_.contains(x)) throw Error(ErrorCode::ElementOutsideGrid, "element not in grid");
  Point a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = points_[i][static_cast<std::size_t>(x.e[i])];
  return a;
}

PointSet GridEmbedding::embed(const GridSet& set) const {
  std::vector<Point> pts;
  pts.reserve(set.size());
  for (const auto& x : set) pts.push_back(embed(x));
  return PointSet(field_.order(), shape_.dim(), std::move(pts));
}

ExponentVector GridEmbedding::unembed(const Point& a) const {
  if (static_cast<int>(a.size()) != shape_.dim()) throw Error(ErrorCode::ElementOutsideGrid, "point has wrong arity");
  ExponentVector x(std::vector<int>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& col = points_[i];
    const auto it = std::find(col.begin(), col.end(), a[i]);
    if (it == col.end()) throw Error(ErrorCode::ElementOutsideGrid, "point not in the embedded grid");
    x.e[i] = static_cast<int>(it - col.begin());
  }
  return x;
}

}  // namespace hilbertkit
