#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "covspec/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = covspec::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "covspec-cli-test";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("check on a catalog triple") {
  const auto r = run({"check", "--relation", "jump", "--catalog", "ecs-s16"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdict"]["holds"] == false);
  CHECK(j["verdict"]["witness"]["S"][0]["order"] == 2);
}

TEST_CASE("torus spectrum rendering") {
  const auto r = run({"covspec-torus", "--catalog", "conway-sloane-row1-H"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  std::vector<std::string> values, qs;
  for (const auto& e : j["covspec"]["entries"]) {
    values.push_back(e["value"]);
    qs.push_back(e["q"]);
  }
  CHECK(values == std::vector<std::string>{"√3", "√5", "√6", "√7"});
  CHECK(qs == std::vector<std::string>{"12", "20", "24", "28"});
  const auto table = run({"--format", "table", "covspec-torus", "--catalog", "conway-sloane-row1-H"});
  CHECK(table.code == 0);
  CHECK(table.out.find("√6") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "--catalog", "a4"},
           {"covspec-torus", "--catalog", "torus-3-2"},
           {"theta", "--catalog", "conway-sloane-row2-Hprime", "--bound", "40"},
           {"catalog", "list"},
           {"jumpset", "--catalog", "restriction-gap"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("catalog get output round-trips through the file verbs") {
  struct Case {
    std::string id, verb, option;
  };
  for (const auto& c : std::vector<Case>{{"a4", "check", "--triple"},
                                         {"translation-2-1-2", "check", "--triple"},
                                         {"todd-s16", "check", "--triple"},
                                         {"conway-sloane-row3-H", "covspec-torus", "--lattice"},
                                         {"heisenberg-cs-row1-H", "covspec-heisenberg", "--heisenberg"},
                                         {"heisenberg-standard", "covspec-heisenberg", "--heisenberg"},
                                         {"restriction-gap", "jumpset", "--lengthmap"}}) {
    CAPTURE(c.id);
    const auto got = run({"catalog", "get", c.id});
    REQUIRE(got.code == 0);
    const auto path = write_temp(c.id + ".json", got.out);
    const auto direct = run({c.verb, "--catalog", c.id});
    const auto via_file = run({c.verb, c.option, path.string()});
    REQUIRE(direct.code == 0);
    REQUIRE(via_file.code == 0);
    auto a = json::parse(direct.out), b = json::parse(via_file.out);
    // the report names its input; only the computed part must match
    a.erase(a.begin());
    b.erase(b.begin());
    CHECK(a == b);
    // the bare object works as well
    const auto bare = write_temp(c.id + "-object.json", json::parse(got.out)["object"].dump());
    CHECK(run({c.verb, c.option, bare.string()}).code == 0);
  }
}

TEST_CASE("validate reports axiom violations") {
  const auto good = write_temp("good-map.json", R"({"group": {"degree": 2, "generators": [[1, 0]]}, "values": ["0", "1"]})");
  auto r = run({"validate", "--lengthmap", good.string()});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["ok"] == true);
  const auto bad = write_temp("bad-map.json", R"({"group": {"degree": 2, "generators": [[1, 0]]}, "values": ["1", "1"]})");
  r = run({"validate", "--lengthmap", bad.string()});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["violations"][0]["axiom"] == 1);
}

TEST_CASE("error exit codes") {
  const auto malformed = write_temp("malformed.json", R"({"rank": 2, "gram": [["1", "0"], ["0", )");
  auto r = run({"covspec-torus", "--lattice", malformed.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("malformed JSON") != std::string::npos);

  const auto missing = write_temp("missing.json", R"({"rank": 2})");
  r = run({"covspec-torus", "--lattice", missing.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("gram") != std::string::npos);

  const auto bad_entry = write_temp("bad-entry.json", R"({"rank": 2, "gram": [["1", "0"], ["0", "x"]]})");
  r = run({"covspec-torus", "--lattice", bad_entry.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("/gram/1/1") != std::string::npos);

  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "--relation", "nope", "--catalog", "a4"}).code == 2);
  CHECK(run({"check", "--catalog", "no-such-id"}).code == 2);
  CHECK(run({"check", "--catalog", "a4", "--triple", "x.json"}).code == 2);
  CHECK(run({"covspec-torus", "--lattice", "/nonexistent/file.json"}).code == 2);

  CHECK(run({"--element-cap", "10", "check", "--catalog", "a4"}).code == 3);
  CHECK(run({"check", "--catalog", "tori-mod3", "--class-cap", "1", "--relation", "jump"}).code == 3);
  CHECK(run({"covspec-torus", "--catalog", "conway-sloane-row1-H", "--max-vectors", "3"}).code == 3);
}

TEST_CASE("catalog verify and help") {
  const auto r = run({"catalog", "verify", "a4", "torus-3-2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
  CHECK(run({"--help"}).code == 0);
}
