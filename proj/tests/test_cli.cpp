#include <filesystem>
#include <map>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stdiam/cli.hpp"

using namespace stdiam;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "stdiam-test-cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& body) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << body;
  return p.string();
}

const std::string kP6 = "p 6 5 0 0\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n";
const std::string kCycle4 = "p 4 4 1 0\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n";

std::string strip_elapsed(const std::string& s) {
  return std::regex_replace(s, std::regex("\"elapsed_ms\":[-0-9.e+]+"), "");
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("run on P6") {
  const auto g = write("p6.graph", kP6);
  const auto s = write("p6.sets", "S 0 1 2\n");
  const auto r = cli({"run", "--graph", g, "--sets", s, "--algo", "bi-diam-m32", "--seed", "4"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["algorithm"] == "bi-diam-m32");
  CHECK(j["seed"] == 4);
  CHECK(j["exact"] == false);
  CHECK(j["rng"].is_string());
  CHECK((j["value"].get<int>() >= 3 && j["value"].get<int>() <= 5));
  CHECK(j["guarantee"]["factor"] == "3/5");
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("run subset diameter on the directed 4-cycle") {
  const auto g = write("c4.graph", kCycle4);
  const auto s = write("c4.sets", "S 0 2\nT 0 2\n");
  const auto r = cli({"run", "--graph", g, "--sets", s, "--algo", "subset-diam-dir"});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["value"] == 2);
}

TEST_CASE("incompatible inputs map to distinct exit codes") {
  const auto p6 = write("p6.graph", kP6);
  const auto c4 = write("c4.graph", kCycle4);
  const auto subset = write("p6sub.sets", "mode subset\nS 0 3\n");
  const auto bi = write("p6.sets", "S 0 1 2\n");
  const auto bi4 = write("c4bi.sets", "S 0 1\n");
  const auto weighted = write("w.graph", "p 2 1 0 1\ne 0 1 4\n");
  const auto w_sets = write("w.sets", "S 0\n");
  CHECK(cli({"run", "--graph", p6, "--sets", subset, "--algo", "bi-diam-m32"}).code == kExitMode);
  CHECK(cli({"run", "--graph", c4, "--sets", bi4, "--algo", "bi-diam-m32"}).code ==
        kExitDirection);
  CHECK(cli({"run", "--graph", p6, "--sets", bi, "--algo", "param-bi-diam-dir"}).code ==
        kExitDirection);
  CHECK(cli({"run", "--graph", weighted, "--sets", w_sets, "--algo", "bi-diam-sqrtn"}).code ==
        kExitWeight);
  CHECK(cli({"run", "--graph", weighted, "--sets", w_sets, "--algo", "bi-ecc", "--tier",
             "sqrtn"})
            .code == kExitWeight);
  CHECK(cli({"run", "--graph", weighted, "--sets", w_sets, "--algo", "bi-ecc"}).code ==
        kExitOk);
}

TEST_CASE("usage and I/O errors") {
  const auto g = write("p6.graph", kP6);
  const auto s = write("p6.sets", "S 0 1 2\n");
  const auto bad = write("bad.graph", "p 2 1 0 0\ne 0 5\n");
  CHECK(cli({"run", "--graph", g, "--sets", s, "--algo", "nope"}).code == kExitUsage);
  CHECK(cli({"run", "--graph", g, "--sets", s}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"run", "--graph", "/nonexistent", "--sets", s, "--algo", "bi-diam-m32"}).code ==
        kExitIo);
  const auto r = cli({"run", "--graph", bad, "--sets", s, "--algo", "bi-diam-m32"});
  CHECK(r.code == kExitIo);
  CHECK(r.err.find("vertex_out_of_range") != std::string::npos);
  const auto sub = write("p6sub.sets", "mode subset\nS 0 3\n");
  CHECK(cli({"run", "--graph", g, "--sets", sub, "--algo", "subset-ecc-dir", "--tau", "2"})
            .code == kExitUsage);
  CHECK(cli({"run", "--graph", g, "--sets", s, "--algo", "bi-ecc", "--tier", "fast"}).code ==
        kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("verify passes, and fails against a corrupted guarantee") {
  const auto g = write("p6.graph", kP6);
  const auto s = write("p6.sets", "S 0 1 2\n");
  const auto ok = cli({"verify", "--graph", g, "--sets", s, "--algo", "bi-diam-linear"});
  REQUIRE(ok.code == kExitOk);
  const json j = json::parse(ok.out);
  CHECK(j["oracle"]["value"] == 5);
  CHECK(j["oracle"]["pass"] == true);

  // bi-diam-linear returns 3 on P6; an exact guarantee cannot admit it.
  const auto bad = cli({"verify", "--graph", g, "--sets", s, "--algo", "bi-diam-linear",
                        "--override-guarantee", "lower:1:0"});
  CHECK(bad.code == kExitViolation);
  CHECK(json::parse(bad.out)["oracle"]["pass"] == false);
  CHECK(cli({"verify", "--graph", g, "--sets", s, "--algo", "bi-diam-linear",
             "--override-guarantee", "sideways:1:0"})
            .code == kExitUsage);
}

TEST_CASE("verify on gadget instances") {
  const auto prefix = (workdir() / "pd").string();
  REQUIRE(cli({"gen", "--family", "PARAM_DIAM", "--n", "4", "--d", "5", "--ell", "1", "--seed",
               "3", "--out", prefix})
              .code == kExitOk);
  const auto r = cli({"verify", "--graph", prefix + ".graph", "--sets", prefix + ".sets",
                      "--algo", "param-bi-diam"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["oracle"]["value"].get<int>() <= 4);
  CHECK(j["searches"].get<int>() <= j["search_budget"].get<int>());
}

TEST_CASE("oracle subcommand") {
  const auto g = write("p6.graph", kP6);
  const auto s = write("p6.sets", "S 0 1 2\n");
  const auto d = cli({"oracle", "--graph", g, "--sets", s});
  REQUIRE(d.code == kExitOk);
  const json jd = json::parse(d.out);
  CHECK(jd["exact"] == true);
  CHECK(jd["value"] == 5);
  CHECK(jd["witness"] == json::array({0, 5}));
  const json jr = json::parse(cli({"oracle", "--graph", g, "--sets", s, "--quantity", "radius"}).out);
  CHECK(jr["value"] == 3);
  CHECK(jr["witness"] == 2);
  const json je =
      json::parse(cli({"oracle", "--graph", g, "--sets", s, "--quantity", "eccentricities"}).out);
  CHECK(je["values"].size() == 3);
  CHECK(cli({"oracle", "--graph", g, "--sets", s, "--quantity", "girth"}).code == kExitUsage);
}

TEST_CASE("gen writes graph, sets and metadata") {
  const auto prefix = (workdir() / "ov").string();
  const auto r = cli({"gen", "--family", "OV_GRAPH", "--n", "3", "--d", "4", "--solution",
                      "--seed", "9", "--out", prefix});
  REQUIRE(r.code == kExitOk);
  CHECK(fs::exists(prefix + ".graph"));
  CHECK(fs::exists(prefix + ".sets"));
  std::ifstream meta(prefix + ".json");
  const json j = json::parse(meta);
  CHECK(j["family"] == "OV_GRAPH");
  CHECK(j["expected"]["has_solution"] == true);
  CHECK(j["roles"].size() == 3);
  const auto v = cli({"verify", "--graph", prefix + ".graph", "--sets", prefix + ".sets",
                      "--algo", "st-ecc-linear"});
  CHECK(v.code == kExitOk);

  CHECK(cli({"gen", "--family", "NOPE", "--out", prefix}).code == kExitUsage);
  CHECK(cli({"gen", "--n", "20", "--m", "60", "--mode", "st", "--out", prefix}).code == kExitOk);
}

TEST_CASE("bench cardinality and empty sweeps") {
  const auto cfg = write("bench.json", R"({
    "instances": [
      {"generator": "random", "n": 20, "m": 40, "seed": 1},
      {"generator": "random", "n": 40, "m": 90, "seed": 2},
      {"generator": "random", "n": 80, "m": 200, "seed": 3}
    ],
    "algorithms": ["bi-diam-m32", "bi-radius-linear"],
    "seeds": [1, 2]
  })");
  const auto r = cli({"bench", "--config", cfg, "--with-oracle"});
  REQUIRE(r.code == kExitOk);
  const auto reports = lines(r.out);
  CHECK(reports.size() == 12);
  for (const json& j : reports) CHECK(j["oracle"]["pass"] == true);

  const auto empty = write("empty.json", R"({"instances": [], "algorithms": [], "seeds": []})");
  const auto e = cli({"bench", "--config", empty});
  CHECK(e.code == kExitOk);
  CHECK(e.out.empty());

  const auto skip = write("skip.json", R"({
    "instances": [{"generator": "random", "n": 20, "m": 40, "mode": "subset"}],
    "algorithms": ["bi-diam-m32"], "seeds": [0]})");
  const auto s = cli({"bench", "--config", skip});
  CHECK(s.code == kExitOk);
  CHECK(lines(s.out).at(0)["skipped"] == true);

  CHECK(cli({"bench", "--config", write("bad.json", "{")}).code == kExitIo);
  CHECK(cli({"bench", "--config", write("bad2.json", R"({"algorithms": ["x"]})")}).code ==
        kExitUsage);
}

TEST_CASE("bench tier sweep: more accurate tiers average higher") {
  const auto cfg = write("tiers.json", R"({
    "instances": [{"generator": "random", "n": 150, "m": 260, "seed": 12}],
    "algorithms": ["bi-diam-linear", "bi-diam-sqrtn", "bi-diam-m32"],
    "seeds": [1, 2, 3, 4, 5, 6, 7, 8]
  })");
  const auto r = cli({"bench", "--config", cfg});
  REQUIRE(r.code == kExitOk);
  std::map<std::string, double> mean;
  for (const json& j : lines(r.out)) mean[j["algorithm"]] += j["value"].get<double>() / 8;
  CHECK(mean["bi-diam-linear"] <= mean["bi-diam-sqrtn"]);
  CHECK(mean["bi-diam-linear"] <= mean["bi-diam-m32"]);
}

TEST_CASE("identical runs print identical reports apart from timing") {
  const auto prefix = (workdir() / "det").string();
  REQUIRE(cli({"gen", "--n", "60", "--m", "150", "--weight-max", "5", "--seed", "2", "--out",
               prefix})
              .code == kExitOk);
  for (const char* algo : {"bi-diam-m32", "bi-radius-m32", "bi-ecc", "st-ecc-m32"}) {
    std::vector<std::string> args{"run", "--graph", prefix + ".graph", "--sets",
                                  prefix + ".sets", "--algo", algo, "--seed", "17"};
    const auto a = cli(args);
    const auto b = cli(args);
    REQUIRE(a.code == kExitOk);
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
  }
}
