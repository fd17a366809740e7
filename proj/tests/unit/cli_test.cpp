#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliRun r;
  r.code = hilbertkit::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json result_of(const CliRun& r) {
  json j = json::parse(r.out);
  j.erase("manifest");
  return j;
}

std::string golden_path(const std::string& name) { return std::string(HILBERTKIT_GOLDEN_DIR) + "/" + name; }

// Compares stdout with a stored golden; HILBERTKIT_UPDATE_GOLDENS=1 rewrites it.
void expect_golden(const std::string& name, const CliRun& r) {
  const std::string path = golden_path(name);
  if (std::getenv("HILBERTKIT_UPDATE_GOLDENS") != nullptr) {
    std::ofstream(path, std::ios::binary) << r.out;
    return;
  }
  std::ifstream f(path, std::ios::binary);
  ASSERT_TRUE(f) << "missing golden " << path;
  std::ostringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(r.out, buf.str()) << name;
}

const char* kCube3 = "2 3\n0 0 0\n0 0 1\n0 1 0\n";
const char* kUniformSource = R"({"kind":"local","m":6,"n":6,"payload":{"outputs":[
  {"vars":[0],"table":[0,1]},{"vars":[1],"table":[0,1]},{"vars":[2],"table":[0,1]},
  {"vars":[3],"table":[0,1]},{"vars":[4],"table":[0,1]},{"vars":[5],"table":[0,1]}]}})";

}  // namespace

TEST(Cli, SpecExamples) {
  EXPECT_EQ(result_of(run({"min-hilbert", "--grid", "2", "2", "2", "--degree", "1", "--size", "5"})), json::parse(R"({"H":4})"));
  EXPECT_EQ(result_of(run({"closure-bound", "--field", "2", "--dim", "3", "--degree", "1", "--size", "3"})),
            json::parse(R"({"bound":4,"nie_wang":"6"})"));
  EXPECT_EQ(result_of(run({"hilbert", "--field", "2", "--dim", "2", "--degree", "1", "--points", "-"}, "2 2\n0 0\n1 1\n")),
            json::parse(R"({"h":2})"));
}

TEST(Cli, Goldens) {
  expect_golden("min_hilbert.json", run({"min-hilbert", "--grid", "3", "3", "2", "--degree", "2", "--size", "11"}));
  expect_golden("hilbert_sm.json", run({"hilbert", "--field", "2", "--dim", "3", "--degree", "1", "--points", "-", "--via", "sm"}, kCube3));
  expect_golden("sm_lex.json", run({"sm", "--field", "3", "--dim", "2", "--points", "-", "--order", "lex"}, "3 2\n0 0\n1 2\n2 1\n"));
  expect_golden("closure.json", run({"closure", "--field", "2", "--dim", "3", "--degree", "1", "--points", "-"}, kCube3));
  expect_golden("tight_set.txt", run({"tight-set", "--field", "3", "--dim", "2", "--degree", "1", "--size", "2"}));
  expect_golden("nie_wang.json", run({"nie-wang", "--field", "2", "--dim", "4", "--degree", "1", "--size", "4"}));
  expect_golden("field_check.json", run({"field-check", "--q", "9"}));
  expect_golden("verify_delta.json", run({"verify", "--claim", "delta", "--params", "shape=3,2", "d=1"}));
  expect_golden("bounds.json", run({"bounds", "--kind", "forest", "--n", "2", "--ell", "1"}));
  expect_golden("extract_bias.json", run({"--seed", "1", "extract", "bias", "--source", "-", "--degree", "2", "--trials", "300"}, kUniformSource));
  expect_golden("extract_disperser.json", run({"extract", "disperser", "--uniform", "3", "--degree", "1"}));
}

TEST(Cli, TightSetRoundTrips) {
  const CliRun tight = run({"tight-set", "--field", "2", "--dim", "3", "--degree", "1", "--size", "3"});
  ASSERT_EQ(tight.code, 0);
  const CliRun cl = run({"closure", "--field", "2", "--dim", "3", "--degree", "1", "--points", "-"}, tight.out);
  ASSERT_EQ(cl.code, 0) << cl.err;
  EXPECT_EQ(result_of(cl).at("closure_size"), 4);
  const CliRun h = run({"hilbert", "--field", "2", "--dim", "3", "--degree", "1", "--points", "-"}, tight.out);
  EXPECT_EQ(result_of(h).at("h"), 3);
  const CliRun as_json = run({"--format", "json", "tight-set", "--field", "2", "--dim", "3", "--degree", "1", "--size", "3"});
  const CliRun again = run({"sm", "--field", "2", "--dim", "3", "--points", "-"}, json::parse(as_json.out).at("points").dump());
  EXPECT_EQ(result_of(again).at("size"), 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"min-hilbert", "--grid", "2", "2", "--degree", "1"}).code, 2);
  EXPECT_EQ(run({"hilbert", "--field", "2", "--dim", "2", "--degree", "1", "--points", "-"}, "2 2\n0 5\n").code, 2);
  EXPECT_EQ(run({"hilbert", "--field", "2", "--dim", "2", "--degree", "1", "--points", "/no/such/file"}).code, 2);
  EXPECT_EQ(run({"extract", "bias", "--uniform", "4", "--degree", "1"}).code, 2);
  EXPECT_EQ(run({"extract", "error", "--source", "-", "--degree", "1"}, "{not json").code, 2);
  EXPECT_EQ(run({"closure", "--field", "2", "--dim", "30", "--degree", "1", "--points", "-"}, "2 30\n").code, 3);
  EXPECT_EQ(run({"verify", "--claim", "general-bd", "--params", "shape=5,5"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ManifestAndGlobals) {
  const CliRun r = run({"--seed", "9", "--jobs", "2", "extract", "error", "--uniform", "5", "--degree", "2", "--outputs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const json& m = j.at("manifest");
  EXPECT_EQ(m.at("command"), "extract error");
  EXPECT_EQ(m.at("seed"), 9);
  EXPECT_EQ(m.at("params").at("outputs"), "2");
  json body = j;
  body.erase("manifest");
  EXPECT_EQ(m.at("output_digest"), hilbertkit::cli::sha256_hex(body.dump()));
  EXPECT_FALSE(r.err.empty());

  const CliRun text = run({"min-hilbert", "--grid", "2", "2", "--degree", "1", "--size", "3", "--format", "text"});
  EXPECT_EQ(text.out, "H: 3\n");
  EXPECT_EQ(hilbertkit::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, NegativeDegreeIsClamped) {
  const CliRun r = run({"min-hilbert", "--grid", "2", "2", "--degree", "-1", "--size", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(result_of(r).at("H"), 0);
}

TEST(Cli, RandomizedCommandsAreDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--seed", "5", "extract", "bias", "--uniform", "6", "--degree", "2", "--trials", "500"},
           {"--seed", "5", "extract", "error", "--uniform", "6", "--degree", "2", "--outputs", "3"},
           {"--seed", "5", "extract", "covering", "--uniform", "6", "--ell", "3", "--degree", "1", "--trials", "200"},
           {"--seed", "5", "--jobs", "3", "extract", "multi", "--uniform", "6", "--degree", "2", "--outputs", "2", "--trials", "100"}}) {
    const CliRun a = run(args);
    const CliRun b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}
