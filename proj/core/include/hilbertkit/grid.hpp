#pragma once

#include <compare>
#include <vector>

#include "hilbertkit/field.hpp"
#include "hilbertkit/integer.hpp"
#include "hilbertkit/point_set.hpp"

namespace hilbertkit {

/// An element of a grid F = prod {0..r_i-1}, also read as the exponent tuple
/// of a monomial. Default comparison is lexicographic with the first
/// coordinate most significant.
struct ExponentVector {
  std::vector<int> e;

  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> coords) : e(std::move(coords)) {}

  std::size_t size() const noexcept { return e.size(); }
  int operator[](std::size_t i) const { return e[i]; }
  int& operator[](std::size_t i) { return e[i]; }

  /// Generalized Hamming weight, the coordinate sum (= monomial degree).
  int weight() const noexcept;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

using Monomial = ExponentVector;

/// Sorted (lex), duplicate-free list of grid elements.
using GridSet = std::vector<ExponentVector>;

/// Radices r_1..r_n of a grid. The order of the radices is kept as given.
class GridShape {
 public:
  /// Throws OutOfRange if some r_i < 1 or the size does not fit 128 bits.
  explicit GridShape(std::vector<int> radices);
  static GridShape hypercube(int q, int n);

  int dim() const noexcept { return static_cast<int>(r_.size()); }
  const std::vector<int>& radices() const noexcept { return r_; }
  int radix(std::size_t i) const { return r_[i]; }
  u128 size() const noexcept { return size_; }
  /// Sum of (r_i - 1), the weight of the lex-last element.
  long long max_weight() const noexcept;

  bool contains(const ExponentVector& x) const noexcept;
  /// Throws ElementOutsideGrid.
  void require(const ExponentVector& x) const;

  /// The same grid with radices sorted ascending.
  GridShape sorted() const;

  friend bool operator==(const GridShape& a, const GridShape& b) { return a.r_ == b.r_; }

 private:
  std::vector<int> r_;
  u128 size_ = 1;
};

u128 lex_rank(const GridShape& shape, const ExponentVector& x);
ExponentVector lex_unrank(const GridShape& shape, u128 k);

/// M_F(k), the k lex-least elements. Materialization is capped at 2^24.
GridSet lex_prefix(const GridShape& shape, u128 k);

/// |M_F(k)_{<=d}| by a digit DP over coordinates; never materializes M_F(k).
/// Throws OutOfRange for k > |F| or d < 0.
u128 count_low_weight_prefix(const GridShape& shape, u128 k, long long d);

/// H_F(d, k), the minimum of |T_{<=d}| over down-closed T with |T| = k.
/// Equals |M_F(k)_{<=d}| once the radices are sorted ascending; the sort is
/// applied here, so any radix order is accepted.
u128 min_hilbert(const GridShape& shape, long long d, u128 k);

/// F_{<=d} in lex order (capped at 2^24 elements).
GridSet low_weight_elements(const GridShape& shape, long long d);

bool is_down_closed(const GridShape& shape, const GridSet& set);
/// Sorts and deduplicates, checking membership in the grid.
GridSet make_grid_set(const GridShape& shape, std::vector<ExponentVector> elems);

/// A down-closed subset of a grid, checked on construction
/// (PreconditionViolated otherwise).
class DownClosedSet {
 public:
  DownClosedSet(const GridShape& shape, std::vector<ExponentVector> elems);
  const GridSet& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }

 private:
  GridSet elems_;
};

/// Up-closure and its complement. Both scan a rank bitmap and accept grids of
/// at most 2^26 elements (GridTooLarge otherwise).
GridSet up_closure(const GridShape& shape, const GridSet& s);
GridSet delta(const GridShape& shape, const GridSet& s);

/// L_{<=d}(r): the r lex-greatest elements of F_{<=d}.
GridSet lex_last_low_weight(const GridShape& shape, long long d, u128 r);

/// Per-coordinate lists of distinct field elements a_{i,1..r_i}; maps grid
/// element x to the point (a_{1,x_1+1}, ..., a_{n,x_n+1}).
class GridEmbedding {
 public:
  GridEmbedding(FieldSpec field, GridShape shape, std::vector<std::vector<FieldElement>> points);
  /// a_{i,j} = element j-1; requires every r_i <= q.
  static GridEmbedding canonical(const FieldSpec& field, const GridShape& shape);

  const FieldSpec& field() const noexcept { return field_; }
  const GridShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<FieldElement>>& points() const noexcept { return points_; }

  Point embed(const ExponentVector& x) const;
  PointSet embed(const GridSet& set) const;
  /// Throws ElementOutsideGrid if the point is not in the image.
  ExponentVector unembed(const Point& a) const;

 private:
  FieldSpec field_;
  GridShape shape_;
  std::vector<std::vector<FieldElement>> points_;
};

}  // namespace hilbertkit
