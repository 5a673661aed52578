#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "linearr/cli.hpp"
#include "test_support.hpp"

using namespace linearr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "linearr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("linearr_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line + "\n");
  return out;
}

}  // namespace

TEST_CASE("validate and nbc") {
  const Run v = run({"validate", testing::fixture_path("fig2.json")});
  CHECK(v.code == kExitOk);
  const Json j = Json::parse(v.out);
  CHECK(j.at("class") == "General");
  CHECK(j.at("points_full").size() == 6);

  const Run n = run({"nbc", testing::fixture_path("fig2.json"), "--seed", "3"});
  CHECK(n.code == kExitOk);
  CHECK(Json::parse(n.out).at("nbc") == Json::parse("[[1,2],[1,3],[1,4],[2,4]]"));
  CHECK(Json::parse(n.out).at("b1_graph") == 4);
}

TEST_CASE("exit codes") {
  CHECK(run({"validate", temp_file("bad.json", "{\"lines\": 3, ")}).code == kExitUsage);
  CHECK(run({"validate", "/nonexistent/arrangement.json"}).code == kExitUsage);
  CHECK(run({"validate", temp_file("schema.json", "{\"points\": []}")}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--trials", "0", "resonance", "generic", testing::fixture_path("fig2.json")}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const Run twice = run({"validate", temp_file("twice.json", R"({"lines": 4, "points": [[0,1,2],[0,1,3]]})")});
  CHECK(twice.code == kExitViolation);
  const Json e = Json::parse(twice.out);
  CHECK(e.at("error") == "PairCoveredTwice");
  CHECK(e.at("pair") == Json::parse("[0,1]"));
}

TEST_CASE("resonance subcommands") {
  const std::string fig2 = testing::fixture_path("fig2.json");
  const Run eval = run({"resonance", "eval", fig2, "--point", R"({"a": [1,2,3,4], "b": ["1/2",0,0,0]})"});
  CHECK(eval.code == kExitOk);
  CHECK(Json::parse(eval.out).at("betti").size() == 4);

  const std::string point = temp_file("point.json", R"({"a": [0,0,0,0], "b": [0,0,0,0]})");
  const Run zero = run({"resonance", "eval", fig2, "--point", point});
  CHECK(zero.code == kExitOk);
  CHECK(Json::parse(zero.out).at("betti") == Json::parse("[1,8,8,1]"));

  CHECK(run({"resonance", "eval", fig2, "--point", R"({"a": [1], "b": []})"}).code == kExitUsage);

  const Run generic = run({"resonance", "generic", fig2});
  CHECK(Json::parse(generic.out).at("betti") == Json::parse("[0,1,1,0]"));
  const Run cls = run({"resonance", "classify", testing::fixture_path("nearpencil_n4.json")});
  CHECK(Json::parse(cls.out).at("predicted_r11_dim") == 6);
}

TEST_CASE("every command succeeds on every fixture") {
  for (const auto& name : testing::fixture_names()) {
    const std::string path = testing::fixture_path(name);
    for (const auto& cmd : {"validate", "report", "nbc", "os", "double", "homology", "ring", "verify"}) {
      CAPTURE(name);
      CAPTURE(cmd);
      CHECK(run({cmd, path}).code == kExitOk);
      CHECK(run({"--format", "table", cmd, path}).code == kExitOk);
    }
  }
}

TEST_CASE("goldens are byte stable") {
  const std::string fig2 = testing::fixture_path("fig2.json");
  CHECK(run({"ring", fig2}).out == testing::read_file(testing::golden_path("fig2_ring.json")));
  CHECK(run({"report", fig2}).out == testing::read_file(testing::golden_path("fig2_report.json")));
  CHECK(run({"--format", "table", "ring", fig2}).out == testing::read_file(testing::golden_path("fig2_ring.txt")));
  CHECK(run({"report", fig2}).out == run({"report", fig2}).out);

  const Run gen = run({"random", "--lines", "6", "--seed", "1", "--count", "3"});
  CHECK(gen.code == kExitOk);
  const auto docs = lines_of(gen.out);
  REQUIRE(docs.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(docs[i] == testing::read_file(testing::fixture_path("random_l6_s1_" + std::to_string(i + 1) + ".json")));
}

TEST_CASE("random output depends on the seed only") {
  const Run a = run({"random", "--lines", "7", "--count", "5", "--seed", "42"});
  const Run b = run({"--seed", "42", "random", "--lines", "7", "--count", "5"});
  const Run c = run({"random", "--lines", "7", "--count", "5", "--seed", "43"});
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const Run generic = run({"random", "--lines", "5", "--density", "0"});
  CHECK(Json::parse(generic.out).at("points") == Json::array());
  CHECK(run({"random", "--lines", "2"}).code == kExitUsage);
}

TEST_CASE("installed binary") {
  const std::string cmd = std::string(LINEARR_BINARY) + " verify " + testing::fixture_path("fig2.json") + " > " +
                          (std::filesystem::temp_directory_path() / "linearr_cli_test_out.json").string();
  CHECK(std::system(cmd.c_str()) == 0);
}

TEST_CASE("report reference examples") {
  const Json fig2 = Json::parse(run({"report", testing::fixture_path("fig2.json")}).out);
  CHECK(fig2.at("homology").at("free_rank") == 8);
  CHECK(fig2.at("isomorphism").at("ok") == true);
  CHECK(fig2.at("beta") == 1);
  CHECK(fig2.at("r11").at("predicted_dim") == 8);

  const Json near = Json::parse(run({"report", testing::fixture_path("nearpencil_n4.json")}).out);
  CHECK(near.at("class") == "NearPencil");
  CHECK(near.at("r11").at("predicted_dim") == 6);

  const Run pappus = run({"report", testing::fixture_path("pappus_violating.json")});
  CHECK(pappus.code == kExitOk);
  CHECK(Json::parse(pappus.out).at("isomorphism").at("ok") == true);

  const Run pencil = run({"validate", testing::fixture_path("pencil_n3.json")});
  CHECK(Json::parse(pencil.out).at("class") == "Pencil");

  const Run bad = run({"validate", temp_file("bad_pos.json", "{\"lines\": 3,\n  \"points\": [[0,1]")});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("line 2") != std::string::npos);
}
