#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "hilbertkit/distribution.hpp"

namespace hilbertkit {

inline constexpr int kMaxSourceInputBits = 24;

enum class SourceKind { local, decision_forest, poly_map, explicit_table, circuit };

const char* to_string(SourceKind kind) noexcept;
SourceKind parse_source_kind(const std::string& text);

/// A samplable source f: {0,1}^m -> {0,1}^n. Bits use the same convention as
/// points: input u_1 and output x_1 are the most significant bits. Variable
/// and wire indices in payloads are 0-based.
///
/// Payloads by kind:
///   local           {"outputs": [{"vars": [i, ...], "table": [b, ...]}, ...]}
///                   table has 2^|vars| bits, vars[0] selects the high half.
///   decision_forest {"trees": [{"nodes": [...]}, ...]}, node 0 is the root;
///                   a node is {"leaf": b} or {"var": i, "lo": j, "hi": k}.
///   poly_map        {"outputs": [[[i, ...], ...], ...]}: per output a list of
///                   monomials, each a list of input variables ([] is 1).
///   explicit_table  {"table": [[b_1, ..., b_n], ...]} with 2^m rows.
///   circuit         {"gates": [{"op": "xor"|"and"|"or"|"not", "in": [w, ...]}],
///                    "outputs": [w, ...]}; wires 0..m-1 are the inputs and
///                   gate g drives wire m + g.
struct SourceSpec {
  SourceKind kind = SourceKind::explicit_table;
  int m = 0;
  int n = 0;
  nlohmann::json payload = nlohmann::json::object();

  /// Throws ParseError on malformed input.
  static SourceSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Validated, ready-to-evaluate form of a SourceSpec.
class CompiledSource {
 public:
  explicit CompiledSource(const SourceSpec& spec);

  std::uint64_t operator()(std::uint64_t input) const { return eval_(input); }
  const SourceSpec& spec() const noexcept { return spec_; }
  /// Locality, depth or degree bound actually attained, per kind
  /// (gate count for circuits, m for tables).
  int complexity() const noexcept { return complexity_; }

 private:
  SourceSpec spec_;
  int complexity_ = 0;
  std::function<std::uint64_t(std::uint64_t)> eval_;
};

/// Exact pushforward of U_m. m <= 24 (InputSpaceTooLarge otherwise).
Distribution realize_distribution(const SourceSpec& spec);

}  // namespace hilbertkit
