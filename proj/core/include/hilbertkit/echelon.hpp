#pragma once

#include <span>
#include <vector>

#include "hilbertkit/field.hpp"

namespace hilbertkit {

/// Incrementally maintained reduced row-echelon basis over F_q.
///
/// Rows are kept fully reduced: each row has a leading 1 at its pivot and
/// zeros at every other row's pivot, so reducing a vector is one pass over the
/// rows in any order.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec field, std::size_t length);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool full() const noexcept { return rank() == length_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::span<const FieldElement> row(std::size_t i) const;

  /// Adds v if it is independent of the current rows; returns whether it was.
  bool insert(std::span<const FieldElement> v);
  bool in_span(std::span<const FieldElement> v) const;
  /// v minus its projection onto the row space (zero iff v is in the span).
  std::vector<FieldElement> residual(std::span<const FieldElement> v) const;

 private:
  void reduce(std::span<FieldElement> v) const;

  FieldSpec field_;
  std::size_t length_;
  std::vector<FieldElement> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a list of equal-length vectors.
std::size_t rank_of(const FieldSpec& field, const std::vector<std::vector<FieldElement>>& rows);

}  // namespace hilbertkit
