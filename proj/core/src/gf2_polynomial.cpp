#include "hilbertkit/gf2_polynomial.hpp"

#include <algorithm>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

namespace {

void check_arity(int n, int d) {
  if (n < 0 || n > 63) throw Error(ErrorCode::OutOfRange, "GF(2) polynomials support 0 <= n <= 63 variables");
  if (d < 0) throw Error(ErrorCode::OutOfRange, "degree must be >= 0");
}

void combos(int n, int deg, int from, std::uint64_t mask, std::vector<std::uint64_t>& out) {
  if (deg == 0) {
    out.push_back(mask);
    return;
  }
  for (int i = from; i <= n - deg; ++i) combos(n, deg - 1, i + 1, mask | std::uint64_t{1} << (n - 1 - i), out);
}

}  // namespace

std::vector<std::uint64_t> multilinear_basis(int n, int d) {
  check_arity(n, d);
  std::vector<std::uint64_t> out;
  for (int deg = 0; deg <= std::min(n, d); ++deg) combos(n, deg, 0, 0, out);
  return out;
}

PolynomialGF2::PolynomialGF2(int n, int d) : n_(n), d_(d), basis_(multilinear_basis(n, d)), coeffs_(basis_.size(), 0) {}

PolynomialGF2::PolynomialGF2(int n, int d, std::vector<std::uint8_t> coeffs) : PolynomialGF2(n, d) {
  if (coeffs.size() != coeffs_.size()) {
    throw Error(ErrorCode::OutOfRange, "expected " + std::to_string(coeffs_.size()) + " coefficients");
  }
  for (auto& c : coeffs) c &= 1U;
  coeffs_ = std::move(coeffs);
}

PolynomialGF2 PolynomialGF2::from_monomials(int n, int d, const std::vector<std::uint64_t>& monomials) {
  PolynomialGF2 p(n, d);
  for (const auto m : monomials) {
    const auto it = std::find(p.basis_.begin(), p.basis_.end(), m);
    if (it == p.basis_.end()) throw Error(ErrorCode::OutOfRange, "monomial outside the degree-d multilinear basis");
    p.coeffs_[static_cast<std::size_t>(it - p.basis_.begin())] ^= 1U;
  }
  return p;
}

PolynomialGF2 PolynomialGF2::variable(int n, int d, int i) {
  if (i < 0 || i >= n) throw Error(ErrorCode::OutOfRange, "variable index out of range");
  return from_monomials(n, d, {std::uint64_t{1} << (n - 1 - i)});
}

std::vector<std::uint64_t> PolynomialGF2::monomials() const {
  std::vector<std::uint64_t> out;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (coeffs_[j]) out.push_back(basis_[j]);
  }
  return out;
}

bool PolynomialGF2::evaluate(std::uint64_t x) const noexcept {
  unsigned acc = 0;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (coeffs_[j] && (x & basis_[j]) == basis_[j]) acc ^= 1U;
  }
  return acc != 0;
}

PolynomialGF2 PolynomialGF2::operator+(const PolynomialGF2& other) const {
  if (other.n_ != n_ || other.d_ != d_) throw Error(ErrorCode::FieldMismatch, "polynomial spaces differ");
  PolynomialGF2 sum = *this;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) sum.coeffs_[j] ^= other.coeffs_[j];
  return sum;
}

nlohmann::json PolynomialGF2::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto m : monomials()) {
    nlohmann::json vars = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) {
      if (bit_of(m, n_, i)) vars.push_back(i);
    }
    terms.push_back(vars);
  }
  return nlohmann::json{{"n", n_}, {"d", d_}, {"monomials", terms}};
}

}  // namespace hilbertkit
