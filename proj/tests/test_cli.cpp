#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fpbm/cli.hpp"
#include "fpbm/graph_io.hpp"
#include "support/fixtures.hpp"

using namespace fpbm;
using namespace fpbm::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("fpbm_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string write(const std::string& name, const Json& doc) { return write(name, doc.dump()); }

std::string graph_file(const std::string& name, const MultiGraph& g, const BVector& b) {
  return write(name, graph_to_json(g, b));
}

}  // namespace

TEST_CASE("nonemptiness with witness and certificate") {
  const auto yes = run({"check-nonempty", graph_file("p3a.json", p3(), b_of(p3(), {"1", "2", "1"}))});
  CHECK(yes.code == 0);
  CHECK(yes.json()["status"] == "ok");
  CHECK(yes.json()["point"] == Json{{"e1", "1"}, {"e2", "1"}});

  const auto no = run({"check-nonempty", graph_file("p3b.json", p3(), ones(p3()))});
  CHECK(no.code == 1);
  const Json doc = no.json();
  CHECK(doc["status"] == "infeasible");
  CHECK(doc["partition"]["V1"] == Json{"v2"});
  CHECK(doc["partition"]["V3"] == Json{"v1", "v3"});
}

TEST_CASE("vertices feed back into is-vertex") {
  const auto path = graph_file("twin2.json", twin2(), ones(twin2()));
  const auto listing = run({"vertices", path});
  REQUIRE(listing.code == 0);
  CHECK(listing.json()["count"] == 4);
  const auto points = write("twin2_vertices.json", listing.out);
  for (const bool oracle : {false, true}) {
    std::vector<std::string> args{"is-vertex", path, "--point", points};
    if (oracle) args.push_back("--oracle");
    const auto check = run(args);
    CHECK(check.code == 0);
    CHECK(check.json()["all_vertices"] == true);
    CHECK(check.json()["results"].size() == 4);
  }
}

TEST_CASE("is-vertex reasons and is-edge") {
  const auto path = graph_file("c4.json", c4(), ones(c4()));
  const auto mid =
      write("mid.json", Json{{"point", {{"e1", "1/2"}, {"e2", "1/2"}, {"e3", "1/2"}, {"e4", "1/2"}}}});
  const auto r = run({"is-vertex", path, "--point", mid});
  CHECK(r.code == 1);
  CHECK(r.json()["reason"] == "not-vertex");
  const auto off = write("off.json", Json{{"e1", "1"}});
  CHECK(run({"is-vertex", path, "--point", off}).json()["reason"] == "degree-mismatch");

  const auto m1 = write("m1.json", Json{{"e1", "1"}, {"e3", "1"}});
  const auto m2 = write("m2.json", Json{{"e2", "1"}, {"e4", "1"}});
  const auto edge = run({"is-edge", path, "--point", m1, "--point", m2});
  CHECK(edge.code == 0);
  CHECK(edge.json()["adjacent"] == true);
  CHECK(run({"is-edge", path, "--point", m1, "--point", m1}).code == 2);
}

TEST_CASE("dimension, faces and lattice") {
  const auto path = graph_file("c4d.json", c4(), ones(c4()));
  CHECK(run({"dimension", path}).json()["dimension"] == 1);
  CHECK(run({"dimension", path, "--oracle"}).json()["dimension"] == 1);
  CHECK(run({"face-graphs", path}).json()["count"] == 4);
  const auto lattice = run({"face-lattice", path});
  CHECK(lattice.json()["faces"].size() == 4);
  CHECK(run({"face-lattice", path, "--oracle"}).json()["faces"] == lattice.json()["faces"]);
  const auto dot = run({"face-lattice", path, "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);

  const auto zero = run({"face-lattice", graph_file("k3z.json", k3(), BVector::zeros(k3()))});
  CHECK(zero.code == 0);
  CHECK(zero.json()["special_case"] == "zero-b");
}

TEST_CASE("positivity, kernels, flows and constructions") {
  const auto k = graph_file("k3.json", k3(), ones(k3()));
  const auto pos = run({"strictly-positive", k});
  CHECK(pos.code == 0);
  CHECK(pos.json()["point"] == Json{{"e1", "1/2"}, {"e2", "1/2"}, {"e3", "1/2"}});
  const auto p = graph_file("p3c.json", p3(), b_of(p3(), {"1", "1", "0"}));
  const auto blocked = run({"strictly-positive", p});
  CHECK(blocked.code == 1);
  CHECK(blocked.json()["kind"] == "EqualityFail");

  const auto c = graph_file("c4k.json", c4(), ones(c4()));
  const auto kernel = run({"kernel-basis", c});
  CHECK(kernel.json()["nullity"] == 1);
  CHECK(kernel.json()["basis"].size() == 1);

  CHECK(run({"solve-flow", k}).json()["point"] == Json{{"e1", "1/2"}, {"e2", "1/2"}, {"e3", "1/2"}});
  const auto demand = write("dem.json", Json{{"demand", {{"v1", "1"}}}});
  const auto unbalanced = run({"solve-flow", c, "--demand", demand});
  CHECK(unbalanced.code == 1);
  CHECK(unbalanced.json().contains("violation"));

  const auto t = graph_file("twin.json", twin(), ones(twin()));
  const auto reduced = run({"reduce", t});
  CHECK(reduced.json()["graph"]["edges"].size() == 1);
  const auto doubled = run({"double", graph_file("loop.json", loop1(), ones(loop1()))});
  CHECK(doubled.json()["graph"]["vertices"].size() == 2);
  CHECK(doubled.json()["graph"]["b"] == Json{{"(v1,1)", "1"}, {"(v1,2)", "1"}});

  const auto audit = run({"oracle-audit", graph_file("twin2a.json", twin2(), ones(twin2()))});
  CHECK(audit.code == 0);
  CHECK(audit.json()["agree"] == true);
}

TEST_CASE("errors, caps and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command", "x"}).code == 2);
  const auto missing = run({"dimension", (scratch() / "absent.json").string()});
  CHECK(missing.code == 2);
  CHECK(missing.json()["status"] == "error");
  const auto bad = write("bad.json", std::string(R"({"vertices": ["a"], "edges": [], "b": {"a": 0.5}})"));
  CHECK(run({"dimension", bad}).code == 2);
  const auto c = graph_file("c4e.json", c4(), ones(c4()));
  CHECK(run({"reduce", c, "--oracle"}).code == 2);

  std::vector<std::pair<int, int>> path;
  for (int i = 1; i < 17; ++i) path.emplace_back(i, i + 1);
  const auto big = make_graph(17, path);
  const auto capped = run({"check-nonempty", graph_file("big.json", big, ones(big))});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("max-vertices") != std::string::npos);
  CHECK(run({"check-nonempty", graph_file("big.json", big, ones(big)), "--max-vertices", "17"}).code == 1);

  const auto k = graph_file("k3d.json", k3d(), ones(k3d()));
  for (const char* cmd : {"vertices", "face-lattice", "kernel-basis", "check-nonempty"})
    CHECK(run({cmd, k}).out == run({cmd, k}).out);
  CHECK(run({"vertices", k, "--pretty"}).out.find("status: ok") != std::string::npos);
}
