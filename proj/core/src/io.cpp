#include "hilbertkit/io.hpp"

#include <limits>
#include <sstream>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "point set line " + std::to_string(line) + ": " + what);
}

std::vector<long long> parse_ints(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      bad_line(line, "not an integer: '" + tok + "'");
    }
    if (used != tok.size()) bad_line(line, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

int to_int(long long v, std::size_t line) {
  if (v < 0 || v > std::numeric_limits<int>::max()) bad_line(line, "value out of range: " + std::to_string(v));
  return static_cast<int>(v);
}

PointSetFile from_json(const json& j) {
  PointSetFile f;
  try {
    const auto shape = j.at("shape").get<std::vector<int>>();
    f.n = static_cast<int>(shape.size());
    if (j.contains("q")) {
      f.q = j.at("q").get<std::uint32_t>();
    } else {
      f.grid = GridShape(shape);
    }
    for (const auto& e : j.at("elems")) {
      auto row = e.get<std::vector<int>>();
      if (static_cast<int>(row.size()) != f.n) throw Error(ErrorCode::ParseError, "element arity differs from shape");
      f.rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("point set JSON: ") + e.what());
  }
  return f;
}

}  // namespace

PointSetFile read_point_set(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_point_set(buf.str());
}

PointSetFile read_point_set(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("point set JSON: ") + e.what());
    }
    return from_json(j);
  }

  PointSetFile f;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (!header) {
      header = true;
      if (line.compare(start, 4, "grid") == 0) {
        std::vector<int> radices;
        for (long long v : parse_ints(line.substr(start + 4), number)) radices.push_back(to_int(v, number));
        try {
          f.grid = GridShape(radices);
        } catch (const Error& e) {
          bad_line(number, e.what());
        }
        f.n = static_cast<int>(radices.size());
      } else {
        const auto h = parse_ints(line, number);
        if (h.size() != 2) bad_line(number, "header must be `q n` or `grid r_1 ... r_n`");
        f.q = static_cast<std::uint32_t>(to_int(h[0], number));
        f.n = to_int(h[1], number);
      }
      continue;
    }
    const auto vals = parse_ints(line, number);
    if (static_cast<int>(vals.size()) != f.n) {
      bad_line(number, "expected " + std::to_string(f.n) + " coordinates, got " + std::to_string(vals.size()));
    }
    std::vector<int> row;
    for (long long v : vals) row.push_back(to_int(v, number));
    f.rows.push_back(std::move(row));
  }
  if (!header) throw Error(ErrorCode::ParseError, "point set file is empty");
  return f;
}

PointSet to_point_set(const PointSetFile& file, const FieldSpec& field, int n) {
  if (file.grid) throw Error(ErrorCode::ParseError, "expected field points (`q n` header), got a grid set");
  if (file.q && *file.q != field.order()) {
    throw Error(ErrorCode::FieldMismatch, "file is over GF(" + std::to_string(*file.q) + "), command uses GF(" + std::to_string(field.order()) + ")");
  }
  if (file.n != n) throw Error(ErrorCode::FieldMismatch, "file has dimension " + std::to_string(file.n) + ", command uses " + std::to_string(n));
  std::vector<Point> pts;
  for (const auto& row : file.rows) {
    Point a;
    for (int v : row) {
      if (static_cast<std::uint32_t>(v) >= field.order()) throw Error(ErrorCode::FieldMismatch, "coordinate " + std::to_string(v) + " outside the field");
      a.push_back(FieldElement{static_cast<std::uint16_t>(v)});
    }
    pts.push_back(std::move(a));
  }
  return PointSet(field.order(), n, std::move(pts));
}

GridSet to_grid_set(const PointSetFile& file, const GridShape& shape) {
  if (file.n != shape.dim()) throw Error(ErrorCode::ElementOutsideGrid, "file dimension differs from the grid");
  std::vector<ExponentVector> elems;
  for (const auto& row : file.rows) elems.emplace_back(row);
  return make_grid_set(shape, std::move(elems));
}

std::string write_point_set_text(const PointSet& s) {
  std::ostringstream out;
  out << s.q() << ' ' << s.dim() << '\n';
  for (const auto& x : s) {
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << x[i].value;
    out << '\n';
  }
  return out.str();
}

std::string write_grid_set_text(const GridShape& shape, const GridSet& set) {
  std::ostringstream out;
  out << "grid";
  for (int r : shape.radices()) out << ' ' << r;
  out << '\n';
  for (const auto& x : set) {
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << x[i];
    out << '\n';
  }
  return out.str();
}

json point_set_json(const PointSet& s) {
  json elems = json::array();
  for (const auto& x : s) {
    json row = json::array();
    for (const auto& c : x) row.push_back(c.value);
    elems.push_back(std::move(row));
  }
  return json{{"q", s.q()}, {"shape", std::vector<std::uint32_t>(static_cast<std::size_t>(s.dim()), s.q())}, {"elems", elems}};
}

json grid_set_json(const GridShape& shape, const GridSet& set) {
  json elems = json::array();
  for (const auto& x : set) elems.push_back(x.e);
  return json{{"shape", shape.radices()}, {"elems", elems}};
}

json field_json(const FieldSpec& field) {
  return json{{"p", field.characteristic()}, {"e", field.degree()}, {"modulus", field.modulus()}};
}

json u128_json(u128 value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return json(static_cast<std::uint64_t>(value));
  return json(to_string(value));
}

}  // namespace hilbertkit
