#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hilbertkit {

/// An element of GF(p^e), encoded as the integer whose base-p digits are the
/// coefficients (low to high) of its polynomial representative. The field
/// itself is carried by context.
struct FieldElement {
  std::uint16_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint16_t v) : value(v) {}

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {
struct FieldTables;
}

inline constexpr std::uint32_t kMaxFieldOrder = 4096;
inline constexpr std::uint32_t kFullTableMaxOrder = 256;

/// A finite field GF(p^e) with q = p^e <= 4096 and table-backed arithmetic.
///
/// Fields with q <= 256 carry full q x q addition and multiplication tables.
/// Larger fields use exp/log tables together with Zech logarithms for
/// addition. A FieldSpec is immutable and cheap to copy (the tables are
/// shared).
class FieldSpec {
 public:
  /// Builds GF(p^e). When `modulus` is absent the lexicographically least
  /// monic irreducible polynomial of degree e is used; polynomials are
  /// ordered by the integer whose base-p digits are c_0..c_{e-1}, i.e.
  /// c_{e-1} is the most significant coefficient.
  static FieldSpec make(int p, int e, std::optional<std::vector<int>> modulus = std::nullopt);

  /// Factors q = p^e and builds the canonical field of that order.
  static FieldSpec of_order(std::uint32_t q);

  int characteristic() const noexcept;
  int degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// Monic modulus, coefficients low to high (length e + 1).
  const std::vector<int>& modulus() const noexcept;
  bool has_full_tables() const noexcept;

  FieldElement element(std::uint32_t value) const;
  FieldElement zero() const noexcept { return FieldElement{0}; }
  FieldElement one() const noexcept { return FieldElement{1}; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  /// Throws Error(DivisionByZero) for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t k) const noexcept;

  /// dst[i] += c * src[i] for all i. The hot loop behind row reduction.
  void axpy(std::span<FieldElement> dst, FieldElement c, std::span<const FieldElement> src) const noexcept;
  void scale(std::span<FieldElement> v, FieldElement c) const noexcept;

  struct AxiomReport {
    bool ok = true;
    bool exhaustive = true;
    std::uint64_t checks = 0;
    std::string failure;
  };

  /// Verifies the field axioms on the tables: exhaustively for q <= 64,
  /// on a fixed pseudorandom sample of triples otherwise.
  AxiomReport check_axioms() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldTables> tables);
  std::shared_ptr<const detail::FieldTables> t_;
};

inline FieldSpec make_field(int p, int e, std::optional<std::vector<int>> modulus = std::nullopt) {
  return FieldSpec::make(p, e, std::move(modulus));
}

bool is_prime(std::uint32_t n) noexcept;

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree <= deg/2. Coefficients low to high, must be monic.
bool is_irreducible(int p, const std::vector<int>& poly);

/// The lexicographically least monic irreducible polynomial of degree e.
std::vector<int> canonical_modulus(int p, int e);

}  // namespace hilbertkit
