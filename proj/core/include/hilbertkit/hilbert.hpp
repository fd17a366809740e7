#pragma once

#include <string>
#include <vector>

#include "hilbertkit/field.hpp"
#include "hilbertkit/grid.hpp"
#include "hilbertkit/integer.hpp"
#include "hilbertkit/point_set.hpp"

namespace hilbertkit {

/// Monomial orders with X1 > X2 > ... > Xn. grlex and grevlex compare total
/// degree first; lex is not degree-compatible.
enum class MonomialOrder { lex, grlex, grevlex };

const char* to_string(MonomialOrder order) noexcept;
/// Accepts "lex", "grlex", "grevlex"; throws ParseError otherwise.
MonomialOrder parse_monomial_order(const std::string& text);
bool is_degree_compatible(MonomialOrder order) noexcept;

/// Strict comparison a < b in the given order.
bool monomial_less(MonomialOrder order, const Monomial& a, const Monomial& b);

/// All monomials in n variables with individual degrees <= max_exp and total
/// degree <= max_deg, sorted increasing in `order`.
std::vector<Monomial> reduced_monomials(int n, int max_exp, long long max_deg, MonomialOrder order = MonomialOrder::grlex);

/// Entry j is prod_i point_i^{e_{j,i}}, with 0^0 = 1.
std::vector<FieldElement> eval_vector(const FieldSpec& field, const Point& point, const std::vector<Monomial>& monomials);

/// Powers table for repeated evaluation: pow[v * q + k] = v^k for k < q.
class PowerTable {
 public:
  explicit PowerTable(const FieldSpec& field);
  FieldElement operator()(FieldElement v, int k) const { return pow_[static_cast<std::size_t>(v.value) * q_ + static_cast<std::size_t>(k)]; }
  void eval(const Point& point, const std::vector<Monomial>& monomials, std::vector<FieldElement>& out) const;

 private:
  FieldSpec field_;
  std::size_t q_;
  std::vector<FieldElement> pow_;
};

/// h_S(d, F_q): rank of the evaluation matrix of S against the reduced
/// monomials of degree <= d. h of the empty set is 0.
std::size_t hilbert_function(const FieldSpec& field, const PointSet& s, long long d);

struct StandardMonomialSet {
  MonomialOrder order = MonomialOrder::grlex;
  /// Increasing in `order`.
  std::vector<Monomial> monomials;

  std::size_t size() const noexcept { return monomials.size(); }
  /// |SM_{<=d}|.
  std::size_t count_up_to_degree(long long d) const;
};

/// SM(S): a reduced monomial is standard iff its evaluation column on S is
/// independent of the columns of all smaller standard monomials. Scans in
/// increasing order and stops once |S| monomials are found. SM(empty) is empty.
StandardMonomialSet standard_monomials(const FieldSpec& field, const PointSet& s, MonomialOrder order);

/// |SM_{<=d}(S)| under a degree-compatible order (OrderNotDegreeCompatible
/// for lex).
std::size_t hilbert_via_sm(const FieldSpec& field, const PointSet& s, long long d, MonomialOrder order);

/// N(n, d, delta): monomials with individual degrees <= delta and total
/// degree <= d. Returns 0 for d < 0.
u128 monomial_count(int n, long long d, int delta);

}  // namespace hilbertkit
