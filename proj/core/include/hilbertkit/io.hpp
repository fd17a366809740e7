#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbertkit/field.hpp"
#include "hilbertkit/grid.hpp"
#include "hilbertkit/point_set.hpp"

namespace hilbertkit {

// Point-set files. Text form: a header line `q n` (points of F_q^n) or
// `grid r_1 ... r_n` (abstract grid elements), then one element per line as
// n space-separated integers. Blank lines and lines starting with '#' are
// ignored. JSON form: {"shape": [...], "elems": [[...], ...]}, plus "q" for
// field points.

struct PointSetFile {
  std::optional<std::uint32_t> q;
  std::optional<GridShape> grid;
  int n = 0;
  std::vector<std::vector<int>> rows;
};

/// Accepts either form (JSON when the first non-blank character is '{').
/// Throws ParseError with the offending line number.
PointSetFile read_point_set(std::istream& in);
PointSetFile read_point_set(const std::string& text);

/// Checks the file's q (if any) against the field.
PointSet to_point_set(const PointSetFile& file, const FieldSpec& field, int n);
GridSet to_grid_set(const PointSetFile& file, const GridShape& shape);

std::string write_point_set_text(const PointSet& s);
std::string write_grid_set_text(const GridShape& shape, const GridSet& set);

nlohmann::json point_set_json(const PointSet& s);
nlohmann::json grid_set_json(const GridShape& shape, const GridSet& set);
nlohmann::json field_json(const FieldSpec& field);
/// Integers beyond 64 bits become decimal strings.
nlohmann::json u128_json(u128 value);

}  // namespace hilbertkit
