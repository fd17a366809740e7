#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hilbertkit/closure.hpp"
#include "hilbertkit/error.hpp"
#include "hilbertkit/extract.hpp"
#include "hilbertkit/extremal.hpp"
#include "hilbertkit/field.hpp"
#include "hilbertkit/grid.hpp"
#include "hilbertkit/hilbert.hpp"
#include "hilbertkit/io.hpp"
#include "hilbertkit/source.hpp"

#ifndef HILBERTKIT_VERSION
#define HILBERTKIT_VERSION "0.0.0"
#endif

namespace hilbertkit::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json result = json::object();
  int code = kSuccess;
  std::string summary;
  // Set when the command's natural output is a text file rather than JSON.
  std::optional<std::string> text;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string format;
  std::string output;
};

// Reads file arguments and remembers their digests for the manifest.
class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string read(const std::string& role, const std::string& path) {
    std::string bytes;
    if (path == "-") {
      if (!stdin_) {
        std::ostringstream buf;
        buf << in_.rdbuf();
        stdin_ = buf.str();
      }
      bytes = *stdin_;
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw UsageError("cannot open " + role + " file '" + path + "'");
      std::ostringstream buf;
      buf << f.rdbuf();
      bytes = buf.str();
    }
    digests_[role] = sha256_hex(bytes);
    return bytes;
  }

  const json& digests() const noexcept { return digests_; }

 private:
  std::istream& in_;
  std::optional<std::string> stdin_;
  json digests_ = json::object();
};

json rational_json(const Rational& r) { return to_string(r); }

json grid_json(const GridSet& set) {
  json out = json::array();
  for (const auto& x : set) out.push_back(x.e);
  return out;
}

json points_json(const PointSet& s) { return point_set_json(s).at("elems"); }

u128 parse_count(const std::string& text, const char* what) {
  try {
    return parse_u128(text);
  } catch (const Error&) {
    throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
}

std::uint64_t require_seed(const Globals& g, const std::string& command) {
  if (!g.seed) throw UsageError(command + " is randomized and requires --seed");
  return *g.seed;
}

std::vector<int> parse_shape(const std::string& text) {
  std::vector<int> r;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      r.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("shape must be comma-separated integers, got '" + text + "'");
    }
  }
  if (r.empty()) throw UsageError("shape is empty");
  return r;
}

class Params {
 public:
  explicit Params(const std::vector<std::string>& kv) {
    for (const auto& item : kv) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--params entries must look like key=value, got '" + item + "'");
      values_[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string str(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw UsageError("missing parameter '" + key + "'");
    return it->second;
  }
  long long integer(const std::string& key) const {
    const std::string v = str(key);
    try {
      std::size_t used = 0;
      const long long x = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw UsageError("parameter '" + key + "' must be an integer, got '" + v + "'");
    }
  }
  long long integer(const std::string& key, long long fallback) const { return has(key) ? integer(key) : fallback; }
  std::optional<long long> maybe(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }

 private:
  std::map<std::string, std::string> values_;
};

// Sorted radix lists (each >= 2) with product <= max_size.
void shapes_up_to(std::size_t max_size, std::vector<int>& cur, std::size_t product, std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  const int lo = cur.empty() ? 2 : cur.back();
  for (int r = lo; product * static_cast<std::size_t>(r) <= max_size; ++r) {
    cur.push_back(r);
    shapes_up_to(max_size, cur, product * static_cast<std::size_t>(r), out);
    cur.pop_back();
  }
}

VerificationReport sweep(const std::string& claim, std::size_t max_size, const std::function<VerificationReport(const GridShape&)>& check) {
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  shapes_up_to(max_size, cur, 1, shapes);
  VerificationReport total;
  total.claim = claim;
  total.params = json{{"max_size", max_size}, {"shapes", shapes.size()}};
  for (const auto& r : shapes) {
    const VerificationReport one = check(GridShape(r));
    total.instances_checked += one.instances_checked;
    total.exhaustive = total.exhaustive && one.exhaustive;
    if (!one.passed() && !total.counterexample) total.counterexample = one.counterexample;
  }
  return total;
}

Distribution distribution_from(Inputs& inputs, const std::string& source, const std::string& points, int uniform) {
  const int given = (!source.empty()) + (!points.empty()) + (uniform >= 0);
  if (given != 1) throw UsageError("give exactly one of --source, --points, --uniform");
  if (uniform >= 0) return Distribution::uniform(uniform);
  if (!points.empty()) {
    const PointSetFile file = read_point_set(inputs.read("points", points));
    if (file.grid || !file.q || *file.q != 2) throw UsageError("--points for extract needs a `2 n` point-set file");
    std::vector<std::uint64_t> xs;
    for (const auto& row : file.rows) {
      std::uint64_t x = 0;
      for (int v : row) {
        if (v > 1) throw UsageError("coordinate outside GF(2) in --points");
        x = x << 1 | static_cast<std::uint64_t>(v);
      }
      xs.push_back(x);
    }
    return Distribution::uniform_on(file.n, std::move(xs));
  }
  json j;
  try {
    j = json::parse(inputs.read("source", source));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("source JSON: ") + e.what());
  }
  return realize_distribution(SourceSpec::from_json(j));
}

PointSet support_points(const Distribution& x) {
  std::vector<Point> pts;
  for (const auto s : x.support()) {
    Point a;
    for (int i = 0; i < x.n(); ++i) a.push_back(FieldElement{static_cast<std::uint16_t>(bit_of(s, x.n(), i))});
    pts.push_back(std::move(a));
  }
  return PointSet(2, x.n(), std::move(pts));
}

json collect_params(const CLI::App* app) {
  json p = json::object();
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->count() == 0 || opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help") continue;
    if (opt->get_expected_max() == 0) {
      p[name] = true;
      continue;
    }
    const auto& res = opt->results();
    if (res.size() == 1) {
      p[name] = res.front();
    } else {
      p[name] = res;
    }
  }
  return p;
}

std::string text_summary(const json& result) {
  std::ostringstream out;
  for (const auto& [key, value] : result.items()) {
    if (key == "manifest") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return out.str();
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine Hilbert functions, degree-d closures and low-degree extractor experiments", "hilbertkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", HILBERTKIT_VERSION);

  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized commands (required by them)");
  app.add_option("--jobs", g.jobs, "Worker threads for partitionable scans")->check(CLI::Range(1u, 256u));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", g.output, "Write the output to FILE instead of stdout");

  Inputs inputs(in);
  std::function<Outcome()> action;
  const CLI::App* chosen = nullptr;
  auto command = [&](CLI::App* sub, std::function<Outcome()> fn) {
    sub->callback([&, sub, fn] {
      chosen = sub;
      action = fn;
    });
  };

  // Shared option storage; each subcommand binds what it needs.
  std::uint32_t q = 0;
  int n = -1;
  long long d = 0;
  std::string size_text;
  std::string points_path;
  std::string order_name = "grlex";

  // field-check
  auto* field_check = app.add_subcommand("field-check", "Build GF(p^e) and verify the field axioms on its tables");
  int p = 0;
  int e = 1;
  std::vector<int> modulus;
  field_check->add_option("--p", p, "Characteristic");
  field_check->add_option("--e", e, "Extension degree");
  field_check->add_option("--modulus", modulus, "Monic modulus coefficients, low to high");
  field_check->add_option("--q", q, "Field order (alternative to --p/--e)");
  command(field_check, [&]() {
    Outcome o;
    if (q == 0 && p == 0) throw UsageError("give --q or --p");
    const FieldSpec f = q != 0 ? FieldSpec::of_order(q)
                               : FieldSpec::make(p, e, modulus.empty() ? std::nullopt : std::optional<std::vector<int>>(modulus));
    const auto report = f.check_axioms();
    o.result = json{{"field", field_json(f)},
                    {"order", f.order()},
                    {"full_tables", f.has_full_tables()},
                    {"axioms", {{"ok", report.ok}, {"exhaustive", report.exhaustive}, {"checks", report.checks}, {"failure", report.failure}}}};
    o.code = report.ok ? kSuccess : kCounterexample;
    o.summary = "GF(" + std::to_string(f.order()) + ") axioms " + (report.ok ? "hold" : "FAIL: " + report.failure);
    return o;
  });

  auto field_opts = [&](CLI::App* sub, bool with_degree) {
    sub->add_option("--field", q, "Field order q")->required();
    sub->add_option("--dim", n, "Dimension n")->required();
    if (with_degree) sub->add_option("--degree", d, "Degree d")->required();
  };
  auto load_points = [&](const FieldSpec& f) { return to_point_set(read_point_set(inputs.read("points", points_path)), f, n); };

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "Affine Hilbert function h_S(d)");
  std::string via = "rank";
  field_opts(hilbert, true);
  hilbert->add_option("--points", points_path, "Point-set file ('-' for stdin)")->required();
  hilbert->add_option("--via", via, "rank or sm")->check(CLI::IsMember({"rank", "sm"}));
  hilbert->add_option("--order", order_name, "grlex or grevlex (with --via sm)");
  command(hilbert, [&]() {
    Outcome o;
    const FieldSpec f = FieldSpec::of_order(q);
    const PointSet s = load_points(f);
    if (d < 0) {
      o.result = json{{"h", 0}, {"warnings", {"negative degree clamped: no monomial has degree < 0"}}};
      o.summary = "h = 0 (negative degree)";
      return o;
    }
    if (via == "sm") {
      const MonomialOrder order = parse_monomial_order(order_name);
      const auto h = hilbert_via_sm(f, s, d, order);
      const auto sm = standard_monomials(f, s, order);
      o.result = json{{"h", h}, {"sm", grid_json(sm.monomials)}};
      o.summary = "h = " + std::to_string(h) + " via SM";
    } else {
      const auto h = hilbert_function(f, s, d);
      o.result = json{{"h", h}};
      o.summary = "h = " + std::to_string(h);
    }
    return o;
  });

  // sm
  auto* sm = app.add_subcommand("sm", "Standard monomials SM(S)");
  field_opts(sm, false);
  sm->add_option("--points", points_path, "Point-set file ('-' for stdin)")->required();
  sm->add_option("--order", order_name, "lex, grlex or grevlex");
  command(sm, [&]() {
    Outcome o;
    const FieldSpec f = FieldSpec::of_order(q);
    const auto result = standard_monomials(f, load_points(f), parse_monomial_order(order_name));
    o.result = json{{"order", to_string(result.order)}, {"size", result.size()}, {"sm", grid_json(result.monomials)}};
    o.summary = "|SM| = " + std::to_string(result.size());
    return o;
  });

  // min-hilbert
  auto* min_h = app.add_subcommand("min-hilbert", "H_F(d, k) = |M(k)_{<=d}|");
  std::vector<int> grid;
  min_h->add_option("--grid", grid, "Grid radices r_1 ... r_n");
  min_h->add_option("--field", q, "Field order (hypercube grid with --dim)");
  min_h->add_option("--dim", n, "Dimension (with --field)");
  min_h->add_option("--degree", d, "Degree d")->required();
  min_h->add_option("--size", size_text, "k")->required();
  command(min_h, [&]() {
    Outcome o;
    if (grid.empty() == (q == 0)) throw UsageError("give either --grid or --field with --dim");
    if (q != 0 && n < 0) throw UsageError("--field needs --dim");
    const GridShape shape = grid.empty() ? GridShape::hypercube(static_cast<int>(q), n) : GridShape(grid);
    const u128 k = parse_count(size_text, "--size");
    if (d < 0) {
      if (k > shape.size()) throw Error(ErrorCode::OutOfRange, "k exceeds grid size");
      o.result = json{{"H", 0}, {"warnings", {"negative degree clamped: H = 0"}}};
      o.summary = "H = 0 (negative degree)";
      return o;
    }
    const u128 h = min_hilbert(shape, d, k);
    o.result = json{{"H", u128_json(h)}};
    o.summary = "H = " + to_string(h);
    return o;
  });

  // closure
  auto* clo = app.add_subcommand("closure", "Degree-d closure cl_d(T) with both size bounds");
  field_opts(clo, true);
  clo->add_option("--points", points_path, "Point-set file ('-' for stdin)")->required();
  command(clo, [&]() {
    Outcome o;
    if (d < 0) throw UsageError("--degree must be >= 0 for closure");
    const FieldSpec f = FieldSpec::of_order(q);
    const ClosureResult r = closure_report(f, load_points(f), d, g.jobs);
    o.result = json{{"closure_size", r.closure.size()},
                    {"bound_tight", u128_json(r.bound_tight)},
                    {"bound_nie_wang", rational_json(r.bound_nie_wang)},
                    {"closure", points_json(r.closure)}};
    o.summary = "|cl_d(T)| = " + std::to_string(r.closure.size()) + ", bound " + to_string(r.bound_tight);
    return o;
  });

  auto bound_opts = [&](CLI::App* sub) {
    field_opts(sub, true);
    sub->add_option("--size", size_text, "m = |T|")->required();
  };

  // closure-bound
  auto* cbound = app.add_subcommand("closure-bound", "max{k : |M(k)_{<=d}| <= m} and the Nie-Wang bound");
  bound_opts(cbound);
  command(cbound, [&]() {
    Outcome o;
    if (d < 0) throw UsageError("--degree must be >= 0");
    const u128 m = parse_count(size_text, "--size");
    const u128 b = closure_size_bound(q, n, d, m);
    const Rational nw = nie_wang_bound(q, n, d, m);
    o.result = json{{"bound", u128_json(b)}, {"nie_wang", rational_json(nw)}};
    o.summary = "bound = " + to_string(b) + ", Nie-Wang = " + to_string(nw);
    return o;
  });

  // tight-set
  auto* tight = app.add_subcommand("tight-set", "A size-m set whose closure meets the tight bound");
  bound_opts(tight);
  command(tight, [&]() {
    Outcome o;
    if (d < 0) throw UsageError("--degree must be >= 0");
    const FieldSpec f = FieldSpec::of_order(q);
    const u128 m = parse_count(size_text, "--size");
    const GridEmbedding emb = GridEmbedding::canonical(f, GridShape::hypercube(static_cast<int>(q), n));
    const PointSet t = tight_closure_set(emb, d, m);
    const PointSet cl = closure(f, t, d, g.jobs);
    const u128 b = closure_size_bound(q, n, d, m);
    o.result = json{{"size", t.size()}, {"closure_size", cl.size()}, {"bound", u128_json(b)}, {"points", point_set_json(t)}};
    if (g.format.empty()) o.text = write_point_set_text(t);
    o.summary = "tight set of size " + std::to_string(t.size()) + ", |cl_d| = " + std::to_string(cl.size()) + " (bound " + to_string(b) + ")";
    return o;
  });

  // nie-wang
  auto* nw = app.add_subcommand("nie-wang", "q^n m / N(n, d, q-1)");
  bound_opts(nw);
  command(nw, [&]() {
    Outcome o;
    if (d < 0) throw UsageError("--degree must be >= 0");
    const Rational r = nie_wang_bound(q, n, d, parse_count(size_text, "--size"));
    o.result = json{{"nie_wang", rational_json(r)}};
    o.summary = "Nie-Wang = " + to_string(r);
    return o;
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check an extremal claim on small instances");
  std::string claim;
  std::vector<std::string> kv;
  verify->add_option("--claim", claim, "Claim id")
      ->required()
      ->check(CLI::IsMember({"general-bd", "characterization", "contiguous", "delta", "bd-small"}));
  verify->add_option("--params", kv, "key=value pairs, e.g. shape=2,2,2 d=1");
  command(verify, [&]() {
    Outcome o;
    const Params prm(kv);
    VerificationReport r;
    if (claim == "general-bd") {
      if (prm.has("shape")) {
        r = verify_general_bd(GridShape(parse_shape(prm.str("shape"))));
      } else {
        const auto max_size = static_cast<std::size_t>(prm.integer("max_size", 20));
        if (max_size > kMaxEnumerationGrid) throw Error(ErrorCode::GridTooLarge, "max_size exceeds 24");
        r = sweep(claim, max_size, [](const GridShape& s) { return verify_general_bd(s); });
      }
    } else if (claim == "characterization") {
      r = verify_characterization(FieldSpec::of_order(static_cast<std::uint32_t>(prm.integer("q", 2))), static_cast<int>(prm.integer("n", 2)));
    } else if (claim == "contiguous") {
      r = verify_contiguous_lemmas(static_cast<int>(prm.integer("n")), prm.maybe("d"));
    } else if (claim == "delta") {
      r = verify_delta_lemmas(GridShape(parse_shape(prm.str("shape"))), prm.integer("d"));
    } else {
      const auto deg = prm.maybe("d");
      if (prm.has("shape")) {
        r = verify_bd_small(GridShape(parse_shape(prm.str("shape"))), deg);
      } else {
        r = sweep(claim, static_cast<std::size_t>(prm.integer("max_size", 10)), [deg](const GridShape& s) { return verify_bd_small(s, deg); });
      }
    }
    o.result = r.to_json();
    o.code = r.passed() ? kSuccess : kCounterexample;
    o.summary = claim + ": " + (r.passed() ? "passed" : "COUNTEREXAMPLE") + " (" + std::to_string(r.instances_checked) + " instances)";
    return o;
  });

  // extract
  auto* extract = app.add_subcommand("extract", "Low-degree extractor and disperser experiments over GF(2)");
  extract->require_subcommand(1);
  extract->fallthrough();
  std::string source_path;
  int uniform = -1;
  int deg = 0;
  double eps = 0.1;
  std::uint64_t trials = 10000;
  bool exhaustive = false;
  int outputs = 1;
  int ell = 0;
  long long k_min = -1;
  auto dist_opts = [&](CLI::App* sub) {
    sub->add_option("--source", source_path, "SourceSpec JSON file ('-' for stdin)");
    sub->add_option("--points", points_path, "Point-set file over GF(2): X uniform on it");
    sub->add_option("--uniform", uniform, "X uniform on {0,1}^n");
    sub->add_option("--degree", deg, "Polynomial degree d")->required();
  };
  auto load_dist = [&]() { return distribution_from(inputs, source_path, points_path, uniform); };

  auto* bias = extract->add_subcommand("bias", "Fraction of random degree-d polynomials with |bias - 1/2| <= eps");
  dist_opts(bias);
  bias->add_option("--eps", eps, "eps");
  bias->add_option("--trials", trials, "Sampled polynomials");
  bias->add_flag("--exhaustive", exhaustive, "Enumerate all of Poly_2(n, d)");
  command(bias, [&]() {
    Outcome o;
    ExperimentConfig cfg;
    cfg.exhaustive = exhaustive;
    cfg.trials = trials;
    cfg.jobs = g.jobs;
    if (!exhaustive) cfg.seed = require_seed(g, "extract bias");
    const auto r = extractor_success_rate(load_dist(), deg, eps, cfg);
    o.result = r.to_json();
    o.result["rng"] = Rng::kAlgorithm;
    o.summary = "rate " + std::to_string(r.rate) + " over " + std::to_string(r.trials) + (r.vacuous ? " (floor vacuous)" : "");
    return o;
  });

  auto* error = extract->add_subcommand("error", "Exact extractor error of t sampled polynomials");
  dist_opts(error);
  error->add_option("--outputs", outputs, "t");
  command(error, [&]() {
    Outcome o;
    const Distribution x = load_dist();
    Rng rng(require_seed(g, "extract error"));
    std::vector<PolynomialGF2> polys;
    json pj = json::array();
    for (int i = 0; i < outputs; ++i) {
      polys.push_back(sample_poly(x.n(), std::min(deg, x.n()), rng));
      pj.push_back(polys.back().to_json());
    }
    const Rational err_sd = extractor_error(polys, x);
    Rational chain = 0;
    json hj = json::array();
    for (const auto& h : hybrid_distances(polys, x)) {
      chain += h;
      hj.push_back(rational_json(h));
    }
    o.result = json{{"polys", pj}, {"error", rational_json(err_sd)}, {"error_float", static_cast<double>(err_sd)},
                    {"hybrids", hj}, {"hybrid_sum", rational_json(chain)}, {"rng", Rng::kAlgorithm}};
    o.summary = "error = " + to_string(err_sd);
    return o;
  });

  auto* disp = extract->add_subcommand("disperser", "Exact probability that a random polynomial is constant on a source");
  disp->add_option("--source", source_path, "SourceSpec JSON file, or a JSON array of them");
  disp->add_option("--points", points_path, "Point-set file over GF(2)");
  disp->add_option("--uniform", uniform, "X uniform on {0,1}^n");
  disp->add_option("--degree", deg, "Polynomial degree d")->required();
  disp->add_option("--k", k_min, "Min-entropy threshold (default: smallest source min-entropy, rounded down)");
  command(disp, [&]() {
    Outcome o;
    std::vector<Distribution> family;
    if (!source_path.empty() && points_path.empty() && uniform < 0) {
      json j;
      try {
        j = json::parse(inputs.read("source", source_path));
      } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("source JSON: ") + ex.what());
      }
      if (j.is_array()) {
        for (const auto& item : j) family.push_back(realize_distribution(SourceSpec::from_json(item)));
      } else {
        family.push_back(realize_distribution(SourceSpec::from_json(j)));
      }
    } else {
      family.push_back(load_dist());
    }
    long long k = k_min;
    if (k < 0) {
      k = 64;
      for (const auto& x : family) k = std::min<long long>(k, static_cast<long long>(std::floor(x.min_entropy() + 1e-9)));
      if (family.empty()) k = 0;
    }
    const auto r = disperser_family_prob(family, k, deg);
    json per = json::array();
    for (const auto& v : r.per_source) per.push_back(rational_json(v));
    o.result = json{{"k", k},
                    {"sources", family.size()},
                    {"floor", r.floor},
                    {"floor_exact", r.floor_exact ? rational_json(*r.floor_exact) : json(nullptr)},
                    {"failure", rational_json(r.failure)},
                    {"failure_exact", r.failure_exact},
                    {"success", rational_json(r.success())},
                    {"per_source_failure", per}};
    o.summary = "success = " + to_string(r.success());
    return o;
  });

  auto* cover = extract->add_subcommand("covering", "Frequency of full Hilbert dimension among random subsets");
  dist_opts(cover);
  cover->add_option("--ell", ell, "ell (subset size binom(ell, <=d))")->required();
  cover->add_option("--trials", trials, "Sampled subsets");
  command(cover, [&]() {
    Outcome o;
    const auto r = covering_experiment(support_points(load_dist()), ell, deg, trials, require_seed(g, "extract covering"));
    o.result = r.to_json();
    o.result["rng"] = Rng::kAlgorithm;
    o.summary = "full-dimension rate " + std::to_string(r.rate) + (r.vacuous ? " (floor vacuous)" : "");
    return o;
  });

  auto* multi = extract->add_subcommand("multi", "t-output extractor error over sampled polynomial tuples");
  dist_opts(multi);
  multi->add_option("--outputs", outputs, "t");
  multi->add_option("--eps", eps, "eps (pass when error <= t eps)");
  multi->add_option("--trials", trials, "Sampled tuples");
  command(multi, [&]() {
    Outcome o;
    ExperimentConfig cfg;
    cfg.trials = trials;
    cfg.jobs = g.jobs;
    cfg.seed = require_seed(g, "extract multi");
    const auto r = multi_extractor_experiment(load_dist(), deg, outputs, eps, cfg);
    o.result = r.to_json();
    o.result["rng"] = Rng::kAlgorithm;
    o.summary = "pass rate " + std::to_string(r.pass_rate) + (r.degenerate ? " (degenerate source)" : "");
    return o;
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "log2 of the number of sources of a kind");
  std::string kind;
  int bn = 0;
  int bl = 0;
  std::optional<int> bm;
  bounds->add_option("--kind", kind, "local, forest, poly or circuit")->required();
  bounds->add_option("--n", bn, "Output bits n")->required();
  bounds->add_option("--ell", bl, "Locality, depth or degree")->required();
  bounds->add_option("--m", bm, "Input bits m (poly, circuit)");
  command(bounds, [&]() {
    Outcome o;
    const auto b = source_count_bounds(parse_source_count_kind(kind), bn, bl, bm);
    o.result = b.to_json();
    o.summary = kind + ": log2 bound " + std::to_string(b.exponent);
    return o;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      app.exit(ex, out, err);
      return kSuccess;
    }
    err << "error: " << ex.what() << "\nRun with --help for usage.\n";
    return kUsage;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return is_resource_cap(ex.code()) ? kResourceCap : kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }

  std::string command_name = chosen->get_name();
  for (const CLI::App* parent = chosen->get_parent(); parent != nullptr && parent != &app; parent = parent->get_parent()) {
    command_name = parent->get_name() + " " + command_name;
  }
  json manifest{{"command", command_name},
                {"params", collect_params(chosen)},
                {"jobs", g.jobs},
                {"inputs", inputs.digests()},
                {"output_digest", sha256_hex(outcome.text ? *outcome.text : outcome.result.dump())},
                {"version", HILBERTKIT_VERSION},
                {"seed", g.seed ? json(*g.seed) : json(nullptr)}};

  std::string payload;
  if (outcome.text) {
    payload = "# manifest " + manifest.dump() + "\n" + *outcome.text;
  } else if (g.format == "text") {
    payload = text_summary(outcome.result);
  } else {
    outcome.result["manifest"] = manifest;
    payload = outcome.result.dump(2) + "\n";
  }

  if (g.output.empty()) {
    out << payload;
  } else {
    std::ofstream f(g.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << g.output << "'\n";
      return kUsage;
    }
    f << payload;
  }
  err << command_name << ": " << outcome.summary << '\n';
  return outcome.code;
}

}  // namespace hilbertkit::cli
