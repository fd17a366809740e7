#pragma once

#include <cstdint>
#include <vector>

#include "hilbertkit/field.hpp"
#include "hilbertkit/integer.hpp"

namespace hilbertkit {

using Point = std::vector<FieldElement>;

// Rank of a point of F_q^n with the first coordinate most significant, so that
// rank order is lexicographic order.
u128 point_rank(std::uint32_t q, const Point& x);
Point point_unrank(std::uint32_t q, int n, u128 rank);

/// A finite subset of F_q^n, deduplicated and sorted lexicographically.
class PointSet {
 public:
  PointSet(std::uint32_t q, int n);
  /// Validates coordinates (< q) and arity (n), then sorts and deduplicates.
  PointSet(std::uint32_t q, int n, std::vector<Point> points);

  /// All of F_q^n. Throws SpaceTooLarge above 2^24 points.
  static PointSet full_space(std::uint32_t q, int n);

  std::uint32_t q() const noexcept { return q_; }
  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool contains(const Point& x) const;
  bool is_subset_of(const PointSet& other) const;

  // Throws FieldMismatch unless the set lives in F_q^n for this field.
  void require_field(const FieldSpec& field) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::uint32_t q_;
  int n_;
  std::vector<Point> points_;
};

}  // namespace hilbertkit
