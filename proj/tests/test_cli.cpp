#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "icecrystal/crystal_graph.hpp"
#include "icecrystal/io.hpp"
#include "support/fixtures.hpp"

using namespace icecrystal;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& env = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "icecrystal_test_cli";
  fs::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("hw") {
  auto r = run({"hw", "--lambda", "2,1,0"});
  CHECK(r.code == 0);
  CHECK(boxes(model_from_json(r.out)) == BoxSet{{1, 4}, {1, 5}, {2, 5}});

  r = run({"hw", "--lambda", "0,0"});
  CHECK(r.code == 0);
  const auto empty = model_from_json(r.out);
  CHECK(empty.rows() == 2);
  CHECK(empty.cols() == 2);
  CHECK(boxes(empty).empty());

  r = run({"hw", "--lambda", "1,2,0"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"hw", "--lambda", "2,x"}).code == 2);
  CHECK(run({"hw"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen") {
  auto r = run({"gen", "--lambda", "0,0,0"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["nodes"].size() == 1);
  CHECK(j["edges"].empty());

  r = run({"gen", "--lambda", "1,0", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["nodes"].size() == 2);
  REQUIRE(j["edges"].size() == 1);
  CHECK(j["edges"][0]["color"] == 1);

  r = run({"gen", "--lambda", "2,1,0", "--format", "dot"});
  CHECK(r.code == 0);
  std::size_t node_lines = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);)
    node_lines += line.find(" [label=") != std::string::npos && line.find("->") == std::string::npos;
  CHECK(node_lines == fixtures::count_ssyt_by_fillings({2, 1, 0}, 3));
  CHECK(r.out == run({"gen", "--lambda", "2,1,0", "--format", "dot"}).out);

  CHECK(run({"gen", "--lambda", "2,1,0", "--format", "png"}).code == 2);
  CHECK(run({"gen", "--lambda", "2,1,0", "--node-cap", "7"}).code == 3);
  CHECK(run({"gen", "--lambda", "2,1,0"}, "7").code == 3);
  CHECK(run({"gen", "--lambda", "2,1,0"}, "8").code == 0);
  CHECK(run({"gen", "--lambda", "2,1,0", "--node-cap", "8"}, "7").code == 0);
  CHECK(run({"gen", "--lambda", "2,1,0"}, "lots").code == 2);

  const auto out = fs::temp_directory_path() / "icecrystal_test_cli" / "g.json";
  fs::create_directories(out.parent_path());
  r = run({"gen", "--lambda", "2,1,0", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(graph_from_json(text.str()).node_count() == 8);
}

TEST_CASE("check") {
  auto r = run({"check", "--lambda", "2,1,0"});
  CHECK(r.code == 0);
  r = run({"check", "--lambda", "3,1,0"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["nodes"] == 15);
  CHECK(j["brute_force"] == 15);
  CHECK(j["ok"] == true);

  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--lambda", "1,0", "--graph", "x.json"}).code == 2);

  const auto good = scratch("good.json", graph_to_json(generate(Partition({2, 1, 0})).graph));
  CHECK(run({"check", "--graph", good.string()}).code == 0);

  // duplicate an edge: two 1-coloured edges out of the same node
  auto g = generate(Partition({1, 0})).graph;
  g.add_edge(0, 1, 1);
  const auto bad = scratch("bad.json", graph_to_json(g));
  r = run({"check", "--graph", bad.string()});
  CHECK(r.code == 1);
  j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == false);
  bool r2 = false;
  for (const auto& v : j["violations"]) r2 = r2 || v["axiom"] == "R2";
  CHECK(r2);

  CHECK(run({"check", "--graph", scratch("junk.json", "{").string()}).code == 2);
  CHECK(run({"check", "--graph", "/nonexistent/graph.json"}).code == 2);
}

TEST_CASE("iso") {
  CHECK(run({"iso", "--lambda", "2,1,0"}).out == "yes\n");
  CHECK(run({"iso", "--lambda", "2,2,1,0"}).code == 0);
  CHECK(run({"iso", "--lambda", "0,0"}).out == "yes\n");
  CHECK(run({"iso", "--lambda", "3,2,1,0"}, "5").code == 3);
  const auto verbose = run({"iso", "--lambda", "1,0", "-v"});
  CHECK(verbose.out.find("(1,0)|(1,3) -> [1]") != std::string::npos);
}

TEST_CASE("apply and validate") {
  const auto example = scratch("example.json", model_to_json(fixtures::worked_example()));
  auto r = run({"apply", "--op", "f", "--color", "2", "--model", example.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "none\n");
  CHECK(run({"apply", "--op", "e", "--color", "2", "--model", example.string()}).out == "none\n");

  r = run({"apply", "--op", "e", "--color", "1", "--model", example.string()});
  REQUIRE(r.code == 0);
  CHECK(boxes(model_from_json(r.out)) == BoxSet{{1, 4}, {3, 4}, {1, 5}});

  const auto raised = scratch("raised.json", r.out);
  r = run({"apply", "--op", "f", "--color", "1", "--model", raised.string()});
  CHECK(r.out == model_to_json(fixtures::worked_example()) + "\n");

  CHECK(run({"apply", "--op", "g", "--color", "1", "--model", example.string()}).code == 2);
  CHECK(run({"apply", "--op", "f", "--color", "3", "--model", example.string()}).code == 2);

  // flip the bottom boundary: still parses, no longer in M(lambda)
  auto text = model_to_json(fixtures::worked_example());
  const std::string bottom = R"("v_edges":[["+")";
  text.replace(text.find(bottom), bottom.size(), R"("v_edges":[["-")");
  const auto broken = scratch("broken.json", text);
  CHECK(run({"apply", "--op", "f", "--color", "1", "--model", broken.string()}).code == 2);

  r = run({"validate", "--model", example.string()});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["boxes"].size() == 3);
  r = run({"validate", "--model", broken.string()});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["violations"].size() >= 1);
}
