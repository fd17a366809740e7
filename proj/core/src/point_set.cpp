#include "hilbertkit/point_set.hpp"

#include <algorithm>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

namespace {

constexpr u128 kMaxMaterializedPoints = u128{1} << 24;

}  // namespace

u128 point_rank(std::uint32_t q, const Point& x) {
  u128 r = 0;
  for (const auto& c : x) r = r * q + c.value;
  return r;
}

Point point_unrank(std::uint32_t q, int n, u128 rank) {
  Point x(static_cast<std::size_t>(n));
  for (std::size_t i = x.size(); i-- > 0;) {
    x[i] = FieldElement{static_cast<std::uint16_t>(rank % q)};
    rank /= q;
  }
  if (rank != 0) throw Error(ErrorCode::OutOfRange, "rank exceeds q^n");
  return x;
}

PointSet::PointSet(std::uint32_t q, int n) : q_(q), n_(n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative dimension");
}

PointSet::PointSet(std::uint32_t q, int n, std::vector<Point> points) : PointSet(q, n) {
  for (const auto& x : points) {
    if (static_cast<int>(x.size()) != n) {
      throw Error(ErrorCode::FieldMismatch, "point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(n));
    }
    for (const auto& c : x) {
      if (c.value >= q) throw Error(ErrorCode::FieldMismatch, "coordinate " + std::to_string(c.value) + " outside GF(" + std::to_string(q) + ")");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
}

PointSet PointSet::full_space(std::uint32_t q, int n) {
  u128 total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > kMaxMaterializedPoints) throw Error(ErrorCode::SpaceTooLarge, "q^n exceeds 2^24");
  }
  PointSet s(q, n);
  s.points_.reserve(static_cast<std::size_t>(total));
  for (u128 r = 0; r < total; ++r) s.points_.push_back(point_unrank(q, n, r));
  return s;
}

bool PointSet::contains(const Point& x) const { return std::binary_search(points_.begin(), points_.end(), x); }

bool PointSet::is_subset_of(const PointSet& other) const {
  return q_ == other.q_ && n_ == other.n_ &&
         std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

void PointSet::require_field(const FieldSpec& field) const {
  if (field.order() != q_) {
    throw Error(ErrorCode::FieldMismatch, "point set over GF(" + std::to_string(q_) + ") used with GF(" + std::to_string(field.order()) + ")");
  }
}

}  // namespace hilbertkit
