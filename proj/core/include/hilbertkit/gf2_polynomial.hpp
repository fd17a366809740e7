#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

namespace hilbertkit {

/// Points of {0,1}^n are bit masks with x_1 as the most significant of the
/// n bits, so integer order is lex order.
inline bool bit_of(std::uint64_t x, int n, int i) noexcept { return (x >> (n - 1 - i)) & 1U; }

/// Multilinear monomials of degree <= d in n variables, as variable masks in
/// the same bit convention. Ordered by degree, then by the lex order of the
/// sorted variable index lists.
std::vector<std::uint64_t> multilinear_basis(int n, int d);

/// A polynomial in Poly_2(n, d): a coefficient indicator over
/// multilinear_basis(n, d).
class PolynomialGF2 {
 public:
  PolynomialGF2(int n, int d);
  PolynomialGF2(int n, int d, std::vector<std::uint8_t> coeffs);
  /// Each monomial is a variable mask; duplicates cancel.
  static PolynomialGF2 from_monomials(int n, int d, const std::vector<std::uint64_t>& monomials);
  /// Single variable x_i (0-based).
  static PolynomialGF2 variable(int n, int d, int i);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  const std::vector<std::uint8_t>& coeffs() const noexcept { return coeffs_; }
  const std::vector<std::uint64_t>& basis() const noexcept { return basis_; }
  /// Variable masks of the monomials with coefficient 1.
  std::vector<std::uint64_t> monomials() const;

  bool evaluate(std::uint64_t x) const noexcept;

  PolynomialGF2 operator+(const PolynomialGF2& other) const;

  nlohmann::json to_json() const;

  friend bool operator==(const PolynomialGF2& a, const PolynomialGF2& b) noexcept {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int n_;
  int d_;
  std::vector<std::uint64_t> basis_;
  std::vector<std::uint8_t> coeffs_;
};

}  // namespace hilbertkit
