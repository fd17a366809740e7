#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hilbertkit/field.hpp"
#include "hilbertkit/grid.hpp"
#include "hilbertkit/integer.hpp"

namespace hilbertkit {

inline constexpr std::size_t kMaxEnumerationGrid = 24;

/// Outcome of a small-scale check of one claim. `counterexample` is empty
/// iff every instance passed.
struct VerificationReport {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  std::optional<nlohmann::json> counterexample;
  std::uint64_t instances_checked = 0;
  bool exhaustive = true;

  bool passed() const noexcept { return !counterexample.has_value(); }
  nlohmann::json to_json() const;
};

/// Calls `visit` once for every down-closed subset of the grid, as a bitmask
/// over lex ranks (bit r = element of rank r). Sets are produced by an
/// include/exclude DFS in lex order where an element may be included only
/// when all its lower covers are. If `size` is given only sets of that size
/// are visited. Grids up to 64 elements are accepted; the count of
/// down-closed sets grows fast, so callers pick their own limits.
void for_each_down_closed_mask(const GridShape& shape, std::optional<std::size_t> size,
                               const std::function<void(std::uint64_t)>& visit);

/// Every down-closed T with |T| = k. |F| <= 24 (GridTooLarge otherwise).
std::vector<GridSet> enumerate_down_closed(const GridShape& shape, std::size_t k);

/// min |T_{<=d}| over down-closed T of size k. |F| <= 24.
std::size_t brute_min_low_weight(const GridShape& shape, long long d, std::size_t k);

struct SubsetMinimum {
  std::size_t minimum = 0;
  bool exhaustive = true;
  std::uint64_t subsets_checked = 0;
};

/// min h_S(d) over k-subsets S of F_q^n. Exhaustive for q^n <= 16, with an
/// early exit once the running minimum reaches H_F(d, k). Above that, `samples`
/// random k-subsets drawn from `seed` are checked and the result is flagged
/// non-exhaustive; with require_exhaustive set it throws SpaceTooLarge.
SubsetMinimum brute_min_hilbert_subsets(const FieldSpec& field, int n, long long d, std::size_t k,
                                        bool require_exhaustive = false, std::uint64_t samples = 10000,
                                        std::uint64_t seed = 0);

/// brute_min_low_weight == min_hilbert for all d and k on one grid
/// (radices sorted ascending first). |F| <= 24.
VerificationReport verify_general_bd(const GridShape& shape);

/// Subset minimum of h_S(d) equals H_F(d, k) for all (d, k) over F_q^n,
/// exhaustively. q^n <= 16.
VerificationReport verify_characterization(const FieldSpec& field, int n);

/// Both contiguous-set lemmas on {0,1}^n, all k, all start points, every d
/// (or only `d`). n <= 16.
VerificationReport verify_contiguous_lemmas(int n, std::optional<long long> d = std::nullopt);

/// Delta/nabla duality on one grid at degree d: for each down-closed
/// T in F_{<=d}, Delta(F_{<=d} \ T) is the maximal down-closed set with
/// degree-<=d part T; for each r, Delta(L_{<=d}(r)) is a lex prefix.
/// |F| <= 2^12 and at most `max_instances` sets T (GridTooLarge otherwise).
VerificationReport verify_delta_lemmas(const GridShape& shape, long long d, std::uint64_t max_instances = 1u << 20);

/// |nabla(L_{<=d}(r))| <= |nabla(S)| for every S in F_{<=d} with |S| = r,
/// exhaustively. |F_{<=d}| <= 24. With no d given, every d is checked.
VerificationReport verify_bd_small(const GridShape& shape, std::optional<long long> d = std::nullopt);

}  // namespace hilbertkit
