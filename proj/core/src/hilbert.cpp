#include "hilbertkit/hilbert.hpp"

#include <algorithm>

#include "hilbertkit/echelon.hpp"
#include "hilbertkit/error.hpp"

namespace hilbertkit {

const char* to_string(MonomialOrder order) noexcept {
  switch (order) {
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::grlex: return "grlex";
    case MonomialOrder::grevlex: return "grevlex";
  }
  return "unknown";
}

MonomialOrder parse_monomial_order(const std::string& text) {
  if (text == "lex") return MonomialOrder::lex;
  if (text == "grlex") return MonomialOrder::grlex;
  if (text == "grevlex") return MonomialOrder::grevlex;
  throw Error(ErrorCode::ParseError, "unknown monomial order '" + text + "' (expected lex, grlex or grevlex)");
}

bool is_degree_compatible(MonomialOrder order) noexcept { return order != MonomialOrder::lex; }

bool monomial_less(MonomialOrder order, const Monomial& a, const Monomial& b) {
  if (order != MonomialOrder::lex) {
    const int da = a.weight();
    const int db = b.weight();
    if (da != db) return da < db;
  }
  if (order == MonomialOrder::grevlex) {
    // Rightmost nonzero entry of b - a negative means a < b.
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
  // Leftmost nonzero entry of b - a positive means a < b.
  return a.e < b.e;
}

std::vector<Monomial> reduced_monomials(int n, int max_exp, long long max_deg, MonomialOrder order) {
  if (max_deg < 0) return {};
  auto out = low_weight_elements(GridShape::hypercube(max_exp + 1, n), max_deg);
  if (order != MonomialOrder::lex) {
    std::stable_sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) { return monomial_less(order, a, b); });
  }
  return out;
}

PowerTable::PowerTable(const FieldSpec& field) : field_(field), q_(field.order()) {
  pow_.resize(q_ * q_);
  for (std::size_t v = 0; v < q_; ++v) {
    FieldElement p = field.one();
    for (std::size_t k = 0; k < q_; ++k) {
      pow_[v * q_ + k] = p;
      p = field.mul(p, FieldElement{static_cast<std::uint16_t>(v)});
    }
  }
}

void PowerTable::eval(const Point& point, const std::vector<Monomial>& monomials, std::vector<FieldElement>& out) const {
  out.resize(monomials.size());
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    const auto& m = monomials[j];
    if (m.size() != point.size()) throw Error(ErrorCode::FieldMismatch, "monomial and point arity differ");
    FieldElement acc = field_.one();
    for (std::size_t i = 0; i < point.size() && acc.value != 0; ++i) {
      if (m[i] >= static_cast<int>(q_)) {
        acc = field_.mul(acc, field_.pow(point[i], static_cast<std::uint64_t>(m[i])));
      } else {
        acc = field_.mul(acc, (*this)(point[i], m[i]));
      }
    }
    out[j] = acc;
  }
}

std::vector<FieldElement> eval_vector(const FieldSpec& field, const Point& point, const std::vector<Monomial>& monomials) {
  for (const auto& c : point) {
    if (c.value >= field.order()) throw Error(ErrorCode::FieldMismatch, "coordinate outside the field");
  }
  std::vector<FieldElement> out;
  PowerTable(field).eval(point, monomials, out);
  return out;
}

std::size_t hilbert_function(const FieldSpec& field, const PointSet& s, long long d) {
  s.require_field(field);
  if (d < 0) throw Error(ErrorCode::OutOfRange, "degree must be >= 0");
  if (s.empty()) return 0;
  const auto monomials = reduced_monomials(s.dim(), static_cast<int>(field.order()) - 1, d);
  const std::size_t target = std::min(s.size(), monomials.size());
  const PowerTable pow(field);
  EchelonBasis basis(field, monomials.size());
  std::vector<FieldElement> row;
  for (const auto& x : s) {
    pow.eval(x, monomials, row);
    basis.insert(row);
    if (basis.rank() == target) break;
  }
  return basis.rank();
}

std::size_t StandardMonomialSet::count_up_to_degree(long long d) const {
  return static_cast<std::size_t>(
      std::count_if(monomials.begin(), monomials.end(), [d](const Monomial& m) { return m.weight() <= d; }));
}

StandardMonomialSet standard_monomials(const FieldSpec& field, const PointSet& s, MonomialOrder order) {
  s.require_field(field);
  StandardMonomialSet result;
  result.order = order;
  if (s.empty()) return result;
  const int q = static_cast<int>(field.order());
  const auto candidates = reduced_monomials(s.dim(), q - 1, static_cast<long long>(s.dim()) * (q - 1), order);
  const PowerTable pow(field);
  EchelonBasis basis(field, s.size());
  std::vector<FieldElement> column(s.size());
  for (const auto& m : candidates) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      FieldElement acc = field.one();
      for (std::size_t j = 0; j < m.size(); ++j) acc = field.mul(acc, pow(s[i][j], m[j]));
      column[i] = acc;
    }
    if (basis.insert(column)) {
      result.monomials.push_back(m);
      if (basis.full()) break;
    }
  }
  return result;
}

std::size_t hilbert_via_sm(const FieldSpec& field, const PointSet& s, long long d, MonomialOrder order) {
  if (!is_degree_compatible(order)) {
    throw Error(ErrorCode::OrderNotDegreeCompatible, std::string(to_string(order)) + " is not degree-compatible");
  }
  if (d < 0) throw Error(ErrorCode::OutOfRange, "degree must be >= 0");
  return standard_monomials(field, s, order).count_up_to_degree(d);
}

u128 monomial_count(int n, long long d, int delta) {
  if (n < 0 || delta < 0) throw Error(ErrorCode::OutOfRange, "n and delta must be >= 0");
  if (d < 0) return 0;
  const long long top = static_cast<long long>(n) * delta;
  if (d >= top) {
    u128 total = 1;
    for (int i = 0; i < n; ++i) {
      if (!checked_mul(total, static_cast<u128>(delta) + 1, total)) throw Error(ErrorCode::OutOfRange, "N(n,d,delta) overflows 128 bits");
    }
    return total;
  }
  if (d > (1LL << 24)) throw Error(ErrorCode::SpaceTooLarge, "degree too large for the monomial DP");
  // ways[w]: monomials in the variables processed so far with degree exactly w.
  std::vector<u128> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<u128> next(ways.size(), 0);
    u128 window = 0;
    for (long long w = 0; w <= d; ++w) {
      if (!checked_add(window, ways[static_cast<std::size_t>(w)], window)) throw Error(ErrorCode::OutOfRange, "N(n,d,delta) overflows 128 bits");
      if (w - delta - 1 >= 0) window -= ways[static_cast<std::size_t>(w - delta - 1)];
      next[static_cast<std::size_t>(w)] = window;
    }
    ways = std::move(next);
  }
  u128 total = 0;
  for (const auto w : ways) {
    if (!checked_add(total, w, total)) throw Error(ErrorCode::OutOfRange, "N(n,d,delta) overflows 128 bits");
  }
  return total;
}

}  // namespace hilbertkit
