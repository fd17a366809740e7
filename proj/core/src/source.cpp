#include "hilbertkit/source.hpp"

#include <algorithm>
#include <bit>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, "source: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) bad(std::string("\"") + key + "\" must be an array");
  return v;
}

long long as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) bad(what + " must be an integer");
  return v.get<long long>();
}

int index_in(const json& v, int limit, const std::string& what) {
  const long long i = as_int(v, what);
  if (i < 0 || i >= limit) bad(what + " " + std::to_string(i) + " out of range [0, " + std::to_string(limit) + ")");
  return static_cast<int>(i);
}

int bit_value(const json& v, const std::string& what) {
  const long long b = as_int(v, what);
  if (b != 0 && b != 1) bad(what + " must be 0 or 1");
  return static_cast<int>(b);
}

// Input variable i (0-based) as a mask over the m input bits.
std::uint64_t input_bit(int m, int i) { return std::uint64_t{1} << (m - 1 - i); }

struct LocalOutput {
  std::vector<int> vars;
  std::vector<std::uint8_t> table;
};

struct TreeNode {
  int var = -1;  // -1 marks a leaf
  int lo = 0;
  int hi = 0;
  int leaf = 0;
};

struct Gate {
  enum class Op { Xor, And, Or, Not } op = Op::Xor;
  std::vector<int> in;
};

int tree_depth(const std::vector<TreeNode>& nodes, int at, std::vector<int>& state) {
  if (state[static_cast<std::size_t>(at)] == 1) bad("decision tree contains a cycle");
  const auto& node = nodes[static_cast<std::size_t>(at)];
  if (node.var < 0) return 0;
  state[static_cast<std::size_t>(at)] = 1;
  const int depth = 1 + std::max(tree_depth(nodes, node.lo, state), tree_depth(nodes, node.hi, state));
  state[static_cast<std::size_t>(at)] = 0;
  return depth;
}

}  // namespace

const char* to_string(SourceKind kind) noexcept {
  switch (kind) {
    case SourceKind::local: return "local";
    case SourceKind::decision_forest: return "decision_forest";
    case SourceKind::poly_map: return "poly_map";
    case SourceKind::explicit_table: return "explicit_table";
    case SourceKind::circuit: return "circuit";
  }
  return "unknown";
}

SourceKind parse_source_kind(const std::string& text) {
  for (auto k : {SourceKind::local, SourceKind::decision_forest, SourceKind::poly_map, SourceKind::explicit_table, SourceKind::circuit}) {
    if (text == to_string(k)) return k;
  }
  bad("unknown kind '" + text + "'");
}

SourceSpec SourceSpec::from_json(const json& j) {
  SourceSpec s;
  const json& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  s.kind = parse_source_kind(kind.get<std::string>());
  const long long m = as_int(field(j, "m"), "m");
  const long long n = as_int(field(j, "n"), "n");
  if (m < 0 || m > 63) bad("m must be in [0, 63]");
  if (n < 1 || n > 63) bad("n must be in [1, 63]");
  s.m = static_cast<int>(m);
  s.n = static_cast<int>(n);
  s.payload = field(j, "payload");
  CompiledSource check(s);  // validates the payload
  return s;
}

json SourceSpec::to_json() const { return json{{"kind", to_string(kind)}, {"m", m}, {"n", n}, {"payload", payload}}; }

CompiledSource::CompiledSource(const SourceSpec& spec) : spec_(spec) {
  const int m = spec.m;
  const int n = spec.n;
  const json& p = spec.payload;
  auto place = [n](int o) { return std::uint64_t{1} << (n - 1 - o); };

  switch (spec.kind) {
    case SourceKind::local: {
      const json& outs = array_field(p, "outputs");
      if (static_cast<int>(outs.size()) != n) bad("local source needs n outputs");
      std::vector<LocalOutput> outputs;
      for (const auto& o : outs) {
        LocalOutput lo;
        for (const auto& v : array_field(o, "vars")) lo.vars.push_back(index_in(v, m, "input variable"));
        if (lo.vars.size() > 20) bad("local output depends on more than 20 inputs");
        const json& table = array_field(o, "table");
        if (table.size() != (std::size_t{1} << lo.vars.size())) bad("local table must have 2^|vars| entries");
        for (const auto& b : table) lo.table.push_back(static_cast<std::uint8_t>(bit_value(b, "table entry")));
        complexity_ = std::max(complexity_, static_cast<int>(lo.vars.size()));
        outputs.push_back(std::move(lo));
      }
      eval_ = [outputs, m, place](std::uint64_t u) {
        std::uint64_t y = 0;
        for (std::size_t o = 0; o < outputs.size(); ++o) {
          std::size_t idx = 0;
          for (int v : outputs[o].vars) idx = idx << 1 | ((u & input_bit(m, v)) ? 1U : 0U);
          if (outputs[o].table[idx]) y |= place(static_cast<int>(o));
        }
        return y;
      };
      break;
    }
    case SourceKind::decision_forest: {
      const json& trees = array_field(p, "trees");
      if (static_cast<int>(trees.size()) != n) bad("decision forest needs n trees");
      std::vector<std::vector<TreeNode>> forest;
      for (const auto& t : trees) {
        const json& nodes = array_field(t, "nodes");
        if (nodes.empty()) bad("decision tree has no nodes");
        const int count = static_cast<int>(nodes.size());
        std::vector<TreeNode> tree;
        for (const auto& nd : nodes) {
          TreeNode node;
          if (nd.is_object() && nd.contains("leaf")) {
            node.leaf = bit_value(nd.at("leaf"), "leaf");
          } else {
            node.var = index_in(field(nd, "var"), m, "tree variable");
            node.lo = index_in(field(nd, "lo"), count, "child index");
            node.hi = index_in(field(nd, "hi"), count, "child index");
          }
          tree.push_back(node);
        }
        std::vector<int> state(tree.size(), 0);
        complexity_ = std::max(complexity_, tree_depth(tree, 0, state));
        forest.push_back(std::move(tree));
      }
      eval_ = [forest, m, place](std::uint64_t u) {
        std::uint64_t y = 0;
        for (std::size_t o = 0; o < forest.size(); ++o) {
          const auto& tree = forest[o];
          const TreeNode* node = &tree[0];
          while (node->var >= 0) node = &tree[static_cast<std::size_t>((u & input_bit(m, node->var)) ? node->hi : node->lo)];
          if (node->leaf) y |= place(static_cast<int>(o));
        }
        return y;
      };
      break;
    }
    case SourceKind::poly_map: {
      const json& outs = array_field(p, "outputs");
      if (static_cast<int>(outs.size()) != n) bad("poly_map needs n outputs");
      std::vector<std::vector<std::uint64_t>> polys;
      for (const auto& o : outs) {
        if (!o.is_array()) bad("poly_map output must be a list of monomials");
        std::vector<std::uint64_t> monos;
        for (const auto& mono : o) {
          if (!mono.is_array()) bad("monomial must be a list of variables");
          std::uint64_t mask = 0;
          for (const auto& v : mono) mask |= input_bit(m, index_in(v, m, "monomial variable"));
          complexity_ = std::max(complexity_, std::popcount(mask));
          monos.push_back(mask);
        }
        polys.push_back(std::move(monos));
      }
      eval_ = [polys, place](std::uint64_t u) {
        std::uint64_t y = 0;
        for (std::size_t o = 0; o < polys.size(); ++o) {
          unsigned acc = 0;
          for (auto mask : polys[o]) acc ^= (u & mask) == mask ? 1U : 0U;
          if (acc) y |= place(static_cast<int>(o));
        }
        return y;
      };
      break;
    }
    case SourceKind::explicit_table: {
      if (m > kMaxSourceInputBits) throw Error(ErrorCode::InputSpaceTooLarge, "explicit table needs m <= 24");
      const json& table = array_field(p, "table");
      if (table.size() != (std::size_t{1} << m)) bad("explicit table needs 2^m rows");
      std::vector<std::uint64_t> rows;
      for (const auto& row : table) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) bad("explicit table rows need n bits");
        std::uint64_t y = 0;
        for (int o = 0; o < n; ++o) {
          if (bit_value(row[static_cast<std::size_t>(o)], "table bit")) y |= place(o);
        }
        rows.push_back(y);
      }
      complexity_ = m;
      eval_ = [rows](std::uint64_t u) { return rows[static_cast<std::size_t>(u)]; };
      break;
    }
    case SourceKind::circuit: {
      const json& gates_json = array_field(p, "gates");
      std::vector<Gate> gates;
      for (const auto& g : gates_json) {
        Gate gate;
        const json& op = field(g, "op");
        if (!op.is_string()) bad("gate op must be a string");
        const auto name = op.get<std::string>();
        if (name == "xor") gate.op = Gate::Op::Xor;
        else if (name == "and") gate.op = Gate::Op::And;
        else if (name == "or") gate.op = Gate::Op::Or;
        else if (name == "not") gate.op = Gate::Op::Not;
        else bad("unknown gate op '" + name + "'");
        const int wires = m + static_cast<int>(gates.size());
        for (const auto& w : array_field(g, "in")) gate.in.push_back(index_in(w, wires, "gate input wire"));
        if (gate.in.empty()) bad("gate has no inputs");
        if (gate.op == Gate::Op::Not && gate.in.size() != 1) bad("not gate takes one input");
        gates.push_back(std::move(gate));
      }
      const int wires = m + static_cast<int>(gates.size());
      const json& outs = array_field(p, "outputs");
      if (static_cast<int>(outs.size()) != n) bad("circuit needs n outputs");
      std::vector<int> outputs;
      for (const auto& w : outs) outputs.push_back(index_in(w, wires, "output wire"));
      complexity_ = static_cast<int>(gates.size());
      eval_ = [gates, outputs, m, place](std::uint64_t u) {
        std::vector<std::uint8_t> wire(static_cast<std::size_t>(m) + gates.size());
        for (int i = 0; i < m; ++i) wire[static_cast<std::size_t>(i)] = (u & input_bit(m, i)) ? 1 : 0;
        for (std::size_t g = 0; g < gates.size(); ++g) {
          const auto& gate = gates[g];
          std::uint8_t v = wire[static_cast<std::size_t>(gate.in[0])];
          for (std::size_t k = 1; k < gate.in.size(); ++k) {
            const std::uint8_t w = wire[static_cast<std::size_t>(gate.in[k])];
            if (gate.op == Gate::Op::Xor) v ^= w;
            else if (gate.op == Gate::Op::And) v &= w;
            else v |= w;
          }
          if (gate.op == Gate::Op::Not) v ^= 1U;
          wire[static_cast<std::size_t>(m) + g] = v;
        }
        std::uint64_t y = 0;
        for (std::size_t o = 0; o < outputs.size(); ++o) {
          if (wire[static_cast<std::size_t>(outputs[o])]) y |= place(static_cast<int>(o));
        }
        return y;
      };
      break;
    }
  }
}

Distribution realize_distribution(const SourceSpec& spec) {
  if (spec.m > kMaxSourceInputBits) throw Error(ErrorCode::InputSpaceTooLarge, "exact realization needs m <= 24");
  const CompiledSource f(spec);
  const std::uint64_t inputs = std::uint64_t{1} << spec.m;
  std::vector<std::uint64_t> outputs(inputs);
  for (std::uint64_t u = 0; u < inputs; ++u) outputs[u] = f(u);
  std::sort(outputs.begin(), outputs.end());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> weighted;
  for (auto y : outputs) {
    if (!weighted.empty() && weighted.back().first == y) {
      ++weighted.back().second;
    } else {
      weighted.emplace_back(y, 1);
    }
  }
  return Distribution(spec.n, std::move(weighted), inputs);
}

}  // namespace hilbertkit
