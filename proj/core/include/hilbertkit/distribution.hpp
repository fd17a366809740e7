#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbertkit/integer.hpp"

namespace hilbertkit {

/// A finite distribution on {0,1}^n with exact rational probabilities
/// weight / total. Support points are sorted, distinct and have positive
/// weight. Pushforwards of U_m have total 2^m; uniform distributions on an
/// arbitrary set have total |set|.
class Distribution {
 public:
  /// Merges duplicate points and drops zero weights. Throws EmptySet when
  /// nothing remains, OutOfRange when weights do not sum to `total`.
  Distribution(int n, std::vector<std::pair<std::uint64_t, std::uint64_t>> weighted, std::uint64_t total);

  static Distribution uniform(int n);
  static Distribution uniform_on(int n, std::vector<std::uint64_t> points);
  static Distribution point_mass(int n, std::uint64_t x);

  int n() const noexcept { return n_; }
  std::size_t support_size() const noexcept { return support_.size(); }
  const std::vector<std::uint64_t>& support() const noexcept { return support_; }
  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
  std::uint64_t total() const noexcept { return total_; }

  Rational probability(std::size_t i) const;
  std::uint64_t max_weight() const noexcept;
  /// -log2 of the largest point probability.
  double min_entropy() const;
  /// Exact test of min-entropy >= k, i.e. total >= 2^k * max_weight.
  bool min_entropy_at_least(long long k) const;

  nlohmann::json to_json() const;

 private:
  int n_;
  std::vector<std::uint64_t> support_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_;
};

}  // namespace hilbertkit
