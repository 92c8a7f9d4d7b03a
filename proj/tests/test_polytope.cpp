#include <doctest.h>

#include <algorithm>

#include "fpbm/error.hpp"
#include "fpbm/graph_structure.hpp"
#include "fpbm/oracle.hpp"
#include "fpbm/polytope.hpp"
#include "support/fixtures.hpp"

using namespace fpbm;
using namespace fpbm::testing;

namespace {

std::vector<EdgeVector> coords(const std::vector<VertexPoint>& vs) {
  std::vector<EdgeVector> out;
  for (const auto& v : vs) out.push_back(v.coords);
  return out;
}

}  // namespace

TEST_CASE("vertex enumeration fixtures") {
  CHECK(coords(enumerate_vertices(c4(), ones(c4()))) ==
        std::vector<EdgeVector>{q({"1", "0", "1", "0"}), q({"0", "1", "0", "1"})});
  CHECK(coords(enumerate_vertices(k3(), ones(k3()))) == std::vector<EdgeVector>{q({"1/2", "1/2", "1/2"})});
  CHECK(enumerate_vertices(twin2(), ones(twin2())).size() == 4);
  CHECK(enumerate_vertices(p3(), ones(p3())).empty());
}

TEST_CASE("vertex tests with reasons") {
  CHECK(is_vertex(k3(), ones(k3()), q({"1/2", "1/2", "1/2"})));
  CHECK(vertex_test(c4(), ones(c4()), q({"1/2", "1/2", "1/2", "1/2"})) == VertexTest::NotVertex);
  const MultiGraph lone({"v1"}, {});
  CHECK(is_vertex(lone, BVector::zeros(lone), {}));
  CHECK(vertex_test(k3(), ones(k3()), q({"1", "1"})) == VertexTest::WrongLength);
  CHECK(vertex_test(k3(), ones(k3()), q({"-1", "2", "0"})) == VertexTest::Negative);
  CHECK(vertex_test(k3(), ones(k3()), q({"1", "1", "1"})) == VertexTest::DegreeMismatch);
}

TEST_CASE("vertex reconstruction from a support graph") {
  const auto g = pan();
  CHECK(vertex_from_graph(g, b_of(g, {"2", "1", "1", "1"}), g.all_edges()) == q({"1/2", "1/2", "1/2", "1"}));
  CHECK_FALSE(vertex_from_graph(k3(), ones(k3()), EdgeSet(3, {0, 1})).has_value());
  CHECK(vertex_from_graph(p3(), b_of(p3(), {"1", "2", "1"}), EdgeSet(2, {0, 1})) == q({"1", "1"}));
  // an even cycle never carries a vertex
  CHECK_FALSE(vertex_from_graph(c4(), ones(c4()), c4().all_edges()).has_value());
}

TEST_CASE("polytope graphs and dimensions") {
  CHECK(polytope_graph(p3(), b_of(p3(), {"1", "1", "0"})) == EdgeSet(2, {0}));
  CHECK(polytope_graph(c4(), ones(c4())) == c4().all_edges());
  CHECK(polytope_graph(p3(), ones(p3())).empty());
  CHECK(dimension(c4(), ones(c4())) == 1);
  CHECK(dimension(k3(), ones(k3())) == 0);
  CHECK(dimension(twin2(), ones(twin2())) == 2);
  CHECK(dimension(p3(), ones(p3())) == -1);
}

TEST_CASE("edge tests on fixtures") {
  CHECK(is_edge_pair(c4(), ones(c4()), q({"1", "0", "1", "0"}), q({"0", "1", "0", "1"})));
  CHECK_FALSE(is_edge_pair(twin2(), ones(twin2()), q({"1", "0", "1", "0"}), q({"0", "1", "0", "1"})));
  CHECK(is_edge_pair(twin2(), ones(twin2()), q({"1", "0", "1", "0"}), q({"0", "1", "1", "0"})));
  const auto vs = enumerate_vertices(k3d(), ones(k3d()));
  REQUIRE(vs.size() == 2);
  CHECK(is_edge_pair(k3d(), ones(k3d()), vs[0].coords, vs[1].coords));
  CHECK_THROWS_AS(is_edge_pair(c4(), ones(c4()), q({"1", "0", "1", "0"}), q({"1", "0", "1", "0"})),
                  PreconditionError);
  CHECK_THROWS_AS(is_edge_pair(c4(), ones(c4()), q({"1", "0", "1", "0"}), q({"1/2", "1/2", "1/2", "1/2"})),
                  PreconditionError);
}

TEST_CASE("enumeration caps") {
  std::vector<std::pair<int, int>> path;
  for (int i = 1; i < 13; ++i) path.emplace_back(i, i + 1);
  const auto g = make_graph(13, path);
  CHECK_THROWS_AS(enumerate_vertices(g, ones(g)), CapExceeded);
  CHECK_NOTHROW(enumerate_vertices(g, ones(g), Limits{13, 20}));
  try {
    enumerate_vertices(g, ones(g));
  } catch (const CapExceeded& e) {
    CHECK(e.cap_name() == "max-vertices");
  }
}

TEST_CASE("vertex properties on the small family") {
  for (const auto& g : small_family(3, 4)) {
    const auto report = analyze_components(g);
    const bool bipartite = report.bipartite_count == report.components.size();
    for (const auto& values : all_b_vectors(g.vertex_count())) {
      const BVector b(g, values);
      const auto vs = enumerate_vertices(g, b);
      const auto oracle = oracle_vertices(g, b);
      CHECK(coords(vs) == oracle);
      for (const auto& v : vs) {
        CHECK(v.support == support(v.coords));
        const auto sub = g.spanning_subgraph(v.support);
        const auto sr = analyze_components(sub);
        CHECK(static_cast<long>(v.support.count()) <=
              static_cast<long>(g.vertex_count()) - static_cast<long>(sr.bipartite_count));
        if (bipartite) CHECK(incidence_nullity(sub) == 0);
        if (bipartite)
          for (const auto& c : sr.components) CHECK(c.excess == -1);
        // no other vertex fits inside this support
        for (const auto& w : vs)
          if (&w != &v) CHECK_FALSE(w.support.is_subset_of(v.support));
        CHECK(vertex_from_graph(g, b, v.support) == v.coords);
      }
      CHECK(dimension(g, b) == oracle_dimension(oracle));
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          const bool adjacent = is_edge_pair(g, b, vs[i].coords, vs[j].coords);
          const EdgeSet joint = vs[i].support | vs[j].support;
          const auto inside = std::count_if(vs.begin(), vs.end(),
                                            [&](const VertexPoint& w) { return w.support.is_subset_of(joint); });
          CHECK(adjacent == (inside == 2));
          if (bipartite) {
            const auto jr = analyze_components(g.spanning_subgraph(joint));
            long cycles = 0;
            for (const auto& c : jr.components) cycles += c.excess + 1;
            CHECK(adjacent == (cycles == 1));
          }
        }
    }
  }
}
