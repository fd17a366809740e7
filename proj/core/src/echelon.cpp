#include "hilbertkit/echelon.hpp"

#include <algorithm>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

EchelonBasis::EchelonBasis(FieldSpec field, std::size_t length) : field_(std::move(field)), length_(length) {}

std::span<const FieldElement> EchelonBasis::row(std::size_t i) const {
  return std::span<const FieldElement>(rows_).subspan(i * length_, length_);
}

void EchelonBasis::reduce(std::span<FieldElement> v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const FieldElement c = v[pivots_[i]];
    if (c.value != 0) field_.axpy(v, field_.neg(c), row(i));
  }
}

bool EchelonBasis::insert(std::span<const FieldElement> v) {
  if (v.size() != length_) throw Error(ErrorCode::OutOfRange, "vector length mismatch");
  if (full()) return false;
  std::vector<FieldElement> w(v.begin(), v.end());
  reduce(w);
  const auto it = std::find_if(w.begin(), w.end(), [](FieldElement x) { return x.value != 0; });
  if (it == w.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - w.begin());
  field_.scale(w, field_.inv(w[pivot]));
  // Clear the new pivot column from the existing rows.
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::span<FieldElement> r(rows_.data() + i * length_, length_);
    const FieldElement c = r[pivot];
    if (c.value != 0) field_.axpy(r, field_.neg(c), w);
  }
  rows_.insert(rows_.end(), w.begin(), w.end());
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::in_span(std::span<const FieldElement> v) const {
  const auto w = residual(v);
  return std::all_of(w.begin(), w.end(), [](FieldElement x) { return x.value == 0; });
}

std::vector<FieldElement> EchelonBasis::residual(std::span<const FieldElement> v) const {
  if (v.size() != length_) throw Error(ErrorCode::OutOfRange, "vector length mismatch");
  std::vector<FieldElement> w(v.begin(), v.end());
  reduce(w);
  return w;
}

std::size_t rank_of(const FieldSpec& field, const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(field, rows.front().size());
  for (const auto& r : rows) {
    basis.insert(r);
    if (basis.full()) break;
  }
  return basis.rank();
}

}  // namespace hilbertkit
