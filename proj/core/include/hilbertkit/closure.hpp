#pragma once

#include "hilbertkit/field.hpp"
#include "hilbertkit/grid.hpp"
#include "hilbertkit/hilbert.hpp"
#include "hilbertkit/integer.hpp"
#include "hilbertkit/point_set.hpp"

namespace hilbertkit {

inline constexpr u128 kMaxClosureSpace = u128{1} << 24;

/// Degree-d closure over a fixed F_q^n. A point a is in cl_d(T) iff its
/// evaluation row lies in the row space of T's evaluation matrix. The scan
/// covers all of F_q^n, so q^n <= 2^24 is required (SpaceTooLarge).
class ClosureEngine {
 public:
  ClosureEngine(FieldSpec field, int n, long long d);

  const FieldSpec& field() const noexcept { return field_; }
  int dim() const noexcept { return n_; }
  long long degree() const noexcept { return d_; }

  /// `jobs` workers split the scan into contiguous rank ranges.
  PointSet closure(const PointSet& t, unsigned jobs = 1) const;

 private:
  FieldSpec field_;
  int n_;
  long long d_;
  u128 space_;
  std::vector<Monomial> monomials_;
  PowerTable pow_;
};

/// cl_d(T). cl_d(empty) is empty.
PointSet closure(const FieldSpec& field, const PointSet& t, long long d, unsigned jobs = 1);

/// max { k : |M^n_q(k)_{<=d}| <= m }, by binary search on k.
u128 closure_size_bound(std::uint32_t q, int n, long long d, u128 m);

/// A set of size m whose closure meets closure_size_bound: the embedded
/// weight-<=d part of M(k) for the maximal admissible k, padded with the
/// lex-least points outside it. The embedding must cover all of F_q^n.
PointSet tight_closure_set(const GridEmbedding& embedding, long long d, u128 m);

/// q^n * m / N(n, d, q-1).
Rational nie_wang_bound(std::uint32_t q, int n, long long d, u128 m);

/// Whether |cl_d(T)| < q^ell. Requires |T| < N(ell, d, q-1)
/// (PreconditionViolated otherwise).
bool closure_exponent_check(const FieldSpec& field, int ell, long long d, const PointSet& t, unsigned jobs = 1);

struct ClosureResult {
  PointSet closure;
  u128 input_size = 0;
  u128 bound_tight = 0;
  Rational bound_nie_wang;
};

ClosureResult closure_report(const FieldSpec& field, const PointSet& t, long long d, unsigned jobs = 1);

}  // namespace hilbertkit
