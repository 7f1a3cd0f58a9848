#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "graphent/cli.hpp"

using doctest::Approx;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = graphent::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "graphent_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("compute on K3 with the signless Laplacian") {
  const auto k3 = write_file("k3.edges", "0 1\n1 2\n0 2\n");
  const auto r = run({"compute", "--input", k3.string(), "--matrix", "q", "--alpha", "2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["graph"] == "Bw");
  const Json& q = j["kinds"][0];
  CHECK(q["kind"] == "q");
  CHECK(q["I1"].get<double>() == Approx(0.5));
  CHECK(q["entropies"][0]["I2"].get<double>() == Approx(1.0));
  CHECK(q["entropies"][0]["I3"].get<double>() == Approx(1.0));
}

TEST_CASE("compute output is byte identical across runs and matches the golden text") {
  const auto k3 = write_file("k3.edges", "0 1\n1 2\n0 2\n");
  const std::vector<std::string> args{"compute", "--input", k3.string(), "--matrix", "q", "--alpha", "2"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  const std::string golden =
      "{\n  \"graph\": \"Bw\",\n  \"order\": 3,\n  \"size\": 3,\n  \"log_base\": 2.0,\n"
      "  \"indices\": {},\n  \"kinds\": [\n    {\n      \"kind\": \"q\",\n"
      "      \"spectrum\": [\n        4.0,\n        1.0,\n        1.0\n      ],\n"
      "      \"spectral_sum\": 6.0,\n      \"I1\": 0.5,\n      \"entropies\": [\n        {\n"
      "          \"alpha\": 2.0,\n          \"I2\": 1.0,\n          \"I3\": 1.0\n        }\n"
      "      ]\n    }\n  ]\n}\n";
  CHECK(a.out == golden);
}

TEST_CASE("compute with defaults records unsupported kinds instead of failing") {
  const auto r = run({"compute", "--input", "-"}, "0 1\n2 3\n");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["kinds"].size() == 10);
  bool distance_error = false;
  for (const auto& k : j["kinds"]) {
    if (k["kind"] == "distance") distance_error = k.contains("error");
  }
  CHECK(distance_error);
  CHECK(j["indices"].contains("m1"));
}

TEST_CASE("graph6 and arc inputs") {
  const auto g6 = write_file("p4.g6", "Ch\n");
  auto r = run({"compute", "--input", g6.string(), "--matrix", "skew", "--alpha", "2"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["graph"] == "Ch");
  const auto arcs = write_file("c3.arcs", "0 1\n1 2\n2 0\n");
  r = run({"compute", "--input", arcs.string(), "--matrix", "skew-randic", "--alpha", "2"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["graph"] == "Bw@given");
}

TEST_CASE("usage and input errors exit with 2") {
  const auto empty = write_file("empty.edges", "");
  auto r = run({"compute", "--input", empty.string(), "--matrix", "q"});
  CHECK(r.code == 2);
  CHECK(r.err.find("ZeroSpectrum") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"compute", "--input", "/nonexistent/file.edges"}).code == 2);
  CHECK(run({"compute", "--input", "-", "--matrix", "nope"}, "0 1\n").code == 2);
  r = run({"compute", "--input", "-", "--alpha", "1"}, "0 1\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("AlphaOne") != std::string::npos);
  CHECK(run({"compute", "--input", "-", "--log-base", "1"}, "0 1\n").code == 2);
  r = run({"compute", "--input", "-"}, "0 0\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("LoopEdge") != std::string::npos);
  CHECK(run({"verify", "--corpus", "all:9"}).code == 2);
  CHECK(run({"verify", "--corpus", "bogus"}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);
  CHECK(run({"scan", "--order", "12"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify over all graphs of order at most 5") {
  const auto r = run({"verify", "--corpus", "all:5", "--alpha", "0.5,2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["corpus"] == "all:5");
  CHECK(j["summary"]["failures"] == 0);
  CHECK(j["summary"]["graphs"] == 1 + 2 + 8 + 64 + 1024);
  CHECK(j.contains("tolerance"));
  for (const auto& c : j["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("witness"));
    CHECK(c["status"] != "fail");
  }
}

TEST_CASE("verify reports are reproducible and worker independent") {
  const auto a = run({"verify", "--corpus", "gnp:8,0.5,20", "--seed", "3", "--workers", "1"});
  const auto b = run({"verify", "--corpus", "gnp:8,0.5,20", "--seed", "3", "--workers", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run({"verify", "--corpus", "gnp:8,0.5,20", "--seed", "4"});
  CHECK(a.out != c.out);
}

TEST_CASE("csv output") {
  const auto r = run({"verify", "--corpus", "all:3", "--format", "csv", "--full"});
  REQUIRE(r.code == 0);
  CHECK(r.out.starts_with("record,id,graph,status,residual"));
  CHECK(r.out.find("\r\n") != std::string::npos);
  CHECK(r.out.find("claim,thm1/q/I1,Bw,pass") != std::string::npos);
  CHECK(r.out.find("summary,cor1.i/upper") != std::string::npos);

  const auto k = run({"compute", "--input", "-", "--matrix", "q", "--alpha", "2", "--format", "csv"},
                     "0 1\n1 2\n0 2\n");
  CHECK(k.out.find("Bw,q,I1,,0.5\r\n") != std::string::npos);
}

TEST_CASE("audit subcommand") {
  auto r = run({"audit", "--probs", "0.9,0.1", "--alpha", "0.5", "--log-base", "e"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["records"][0]["outcome"] == "violated");
  CHECK(j["records"][0]["margin"].get<double>() == Approx(-0.0267).epsilon(0.01));
  r = run({"audit", "--corpus", "all:4", "--alpha", "0.5,2"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["vectors"].get<int>() > 0);
  CHECK(run({"audit", "--corpus", "all:4", "--alpha", "0.5,2"}).out == r.out);
}

TEST_CASE("scan subcommand") {
  const auto r = run({"scan", "--family", "trees", "--order", "6", "--matrix", "randic-incidence"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["members"] == 1296);
  for (const auto& m : j["maximizers"]) CHECK(m["star"] == true);
}

TEST_CASE("output file") {
  const fs::path out = fs::temp_directory_path() / "graphent_cli_test" / "report.json";
  fs::remove(out);
  const auto r = run({"compute", "--input", "-", "--matrix", "q", "--out", out.string()}, "0 1\n");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(out));
}
