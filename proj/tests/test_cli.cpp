#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfm/cli.hpp"
#include "dfm/errors.hpp"
#include "dfm/matrix_io.hpp"
#include "oracle.hpp"

using namespace dfm;
namespace fs = std::filesystem;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dfmat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DFMAT_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / ("dfmat_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}
}  // namespace

TEST_CASE("matrix file parsing") {
  CHECK(parse_matrix_file(data("ma.json")) == oracle::ma());
  CHECK(parse_matrix_file(data("a6.json")) == oracle::a6());
  CHECK(parse_matrix_file(data("m9.json")) == oracle::m9());
  CHECK(parse_matrix_file(data("m5.json")) == oracle::m5());
  CHECK(parse_matrix_json(R"({"n": 1, "entries": [["1/(t-1) + t"]]})")(0, 0) == oracle::rf("(t^2-t+1)/(t-1)"));
  CHECK(parse_matrix_json(R"([[1, "t"], [0, 2]])") == oracle::mat({{"1", "t"}, {"0", "2"}}));

  try {
    parse_matrix_json("{\"n\": 1,\n \"entries\": [[\"t^\"]]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 17);  // the caret inside the string literal
  }
  CHECK_THROWS_AS(parse_matrix_json("{\"n\": 2, \"entries\": [[\"1\"]]}"), ShapeError);
  CHECK_THROWS_AS(parse_matrix_json("[[\"1\", \"2\"]]"), ShapeError);
  CHECK_THROWS_AS(parse_matrix_json("[[1,"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file("/nonexistent/m.json"), IoError);
}

TEST_CASE("serialization round trip") {
  oracle::Gen g(61);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = g.small(1, 4);
    MatF x = g.matf(n, n, 3);
    CHECK(parse_matrix_json(serialize_matrix(x)) == x);
  }
}

TEST_CASE("exit code table") {
  CHECK(run({"check-commute", data("ma.json")}).code == kExitOk);
  CHECK(run({"check-commute", data("a6.json")}).code == kExitOk);
  auto nc = temp_file("nc.json", R"({"n": 2, "entries": [["0", "1"], ["t", "0"]]})");
  CHECK(run({"check-commute", nc}).code == kExitNotCommuting);
  CHECK(run({"check-commute", "/nonexistent.json"}).code == kExitError);
  CHECK(run({"check-commute", temp_file("bad.json", "[[\"t^\"]]")}).code == kExitError);
  CHECK(run({"check-commute", temp_file("shape.json", "[[\"1\", \"2\"]]")}).code == kExitError);

  CHECK(run({"classify", data("ma.json")}).code == kExitOk);
  CHECK(run({"classify", nc}).code == kExitOk);
  CHECK(run({"classify"}).code == kExitUsage);

  auto d = run({"decompose", nc});
  CHECK(d.code == kExitDomainError);
  CHECK(d.err.find("M M' != M' M") != std::string::npos);
  CHECK(run({"decompose", data("m5.json"), "--root-bound", "3"}).code == kExitOk);
  CHECK(run({"decompose", data("m5.json"), "--root-bound", "x"}).code == kExitUsage);
  CHECK(run({"diagonalize", data("ma.json")}).code == kExitOk);
  CHECK(run({"diagonalize", data("ma.json")}).out.find("not K-diagonalizable within root bound") != std::string::npos);

  CHECK(run({"wronskian", "1", "t", "t^2"}).code == kExitOk);
  CHECK(run({"wronskian", "1", "t^"}).code == kExitError);
  CHECK(run({"wronskian"}).code == kExitUsage);

  CHECK(run({"newton-experiment", "--n", "2", "--r", "2", "--trials", "2", "--seed", "1"}).code == kExitOk);
  CHECK(run({"newton-experiment", "--n", "0"}).code == kExitUsage);
  CHECK(run({"newton-experiment", "--damping", "2"}).code == kExitUsage);

  CHECK(run({"make-type2", "--f", "1,t,t^2", "--seed", "3"}).code == kExitOk);
  CHECK(run({"make-type2", "--f", "1,t", "--seed", "3"}).code == kExitDomainError);
  CHECK(run({"make-type2"}).code == kExitUsage);

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"classify", "--help"}).code == kExitOk);
}

TEST_CASE("reports") {
  auto w = run({"wronskian", "1", "t", "t^2", "--json"});
  auto j = Json::parse(w.out);
  CHECK(j["result"]["rank"] == 3);
  CHECK(j["tool"] == "dfmat");
  CHECK(j["command"] == "wronskian");
  CHECK(run({"wronskian", "1", "t", "t^2"}).out.find("rank over K: 3") != std::string::npos);

  auto c = Json::parse(run({"classify", data("ma.json"), "--json"}).out);
  CHECK(c["result"]["commutes_c1"] == true);
  CHECK(c["result"]["type1"].is_null());
  CHECK(c["result"]["type2"]["f"] == Json::array({"t^2", "-2*t", "1"}));
  CHECK(std::string(c["input_digest"]).rfind("sha256:", 0) == 0);
  CHECK_FALSE(c.contains("timing_ms"));
  CHECK(Json::parse(run({"classify", data("ma.json"), "--json", "--timing"}).out).contains("timing_ms"));

  // deterministic for fixed input and seed
  std::vector<std::string> e = {"newton-experiment", "--n", "3", "--r", "3", "--trials", "4", "--seed", "9", "--json"};
  CHECK(run(e).out == run(e).out);

  // make-type2 output is a valid matrix file of a type 2 matrix
  auto mk = run({"make-type2", "--f", "1,t,t^2", "--seed", "3"});
  auto f = temp_file("mk.json", mk.out);
  auto cl = Json::parse(run({"classify", f, "--json"}).out);
  CHECK_FALSE(cl["result"]["type2"].is_null());
}

TEST_CASE("classify on the shipped M_a file is byte-stable") {
  std::ifstream in(std::string(DFMAT_GOLDEN_DIR) + "/ma.classify.json");
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(run({"classify", data("ma.json"), "--json"}).out == golden.str());
}
