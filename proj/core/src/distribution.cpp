#include "hilbertkit/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

Distribution::Distribution(int n, std::vector<std::pair<std::uint64_t, std::uint64_t>> weighted, std::uint64_t total)
    : n_(n), total_(total) {
  if (n < 0 || n > 63) throw Error(ErrorCode::OutOfRange, "distributions support 0 <= n <= 63");
  std::sort(weighted.begin(), weighted.end());
  std::uint64_t sum = 0;
  for (const auto& [x, w] : weighted) {
    if (n < 64 && (x >> n) != 0) throw Error(ErrorCode::OutOfRange, "support point has more than n bits");
    if (w == 0) continue;
    sum += w;
    if (!support_.empty() && support_.back() == x) {
      weights_.back() += w;
    } else {
      support_.push_back(x);
      weights_.push_back(w);
    }
  }
  if (support_.empty()) throw Error(ErrorCode::EmptySet, "distribution has empty support");
  if (sum != total) throw Error(ErrorCode::OutOfRange, "weights do not sum to the stated total");
}

Distribution Distribution::uniform(int n) {
  if (n < 0 || n > 24) throw Error(ErrorCode::OutOfRange, "uniform distribution supports n <= 24");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> w;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) w.emplace_back(x, 1);
  return Distribution(n, std::move(w), std::uint64_t{1} << n);
}

Distribution Distribution::uniform_on(int n, std::vector<std::uint64_t> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> w;
  for (auto x : points) w.emplace_back(x, 1);
  return Distribution(n, std::move(w), points.size());
}

Distribution Distribution::point_mass(int n, std::uint64_t x) { return Distribution(n, {{x, 1}}, 1); }

Rational Distribution::probability(std::size_t i) const { return Rational(BigInt(weights_.at(i)), BigInt(total_)); }

std::uint64_t Distribution::max_weight() const noexcept { return *std::max_element(weights_.begin(), weights_.end()); }

double Distribution::min_entropy() const {
  return std::log2(static_cast<double>(total_)) - std::log2(static_cast<double>(max_weight()));
}

bool Distribution::min_entropy_at_least(long long k) const {
  if (k <= 0) return true;
  if (k >= 64) return false;
  return to_bigint(total_) >= (BigInt(1) << static_cast<unsigned>(k)) * max_weight();
}

nlohmann::json Distribution::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < support_.size(); ++i) pts.push_back({support_[i], weights_[i]});
  return nlohmann::json{{"n", n_}, {"total", total_}, {"support", pts}};
}

}  // namespace hilbertkit
