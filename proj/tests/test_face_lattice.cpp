#include <doctest.h>

#include <algorithm>

#include "fpbm/error.hpp"
#include "fpbm/face_lattice.hpp"
#include "fpbm/feasibility.hpp"
#include "fpbm/graph_structure.hpp"
#include "fpbm/oracle.hpp"
#include "support/fixtures.hpp"

using namespace fpbm;
using namespace fpbm::testing;

TEST_CASE("face graph membership") {
  CHECK(is_face_graph(c4(), ones(c4()), EdgeSet(4, {0, 2})));
  CHECK_FALSE(is_face_graph(c4(), ones(c4()), EdgeSet(4, {0})));
  CHECK(is_face_graph(c4(), ones(c4()), EdgeSet(4)));
  CHECK(is_face_graph(k3(), ones(k3()), EdgeSet(3)));
  CHECK_THROWS_AS(is_face_graph(c4(), BVector::zeros(c4()), EdgeSet(4)), PreconditionError);
}

TEST_CASE("face graph counts") {
  CHECK(enumerate_face_graphs(c4(), ones(c4())).size() == 4);
  CHECK(enumerate_face_graphs(k3(), ones(k3())).size() == 2);
  CHECK(enumerate_face_graphs(twin2(), ones(twin2())).size() == 10);
  CHECK_THROWS_AS(enumerate_face_graphs(k3(), BVector::zeros(k3())), PreconditionError);
}

TEST_CASE("faces from graphs") {
  const auto whole = face_from_graph(c4(), ones(c4()), c4().all_edges());
  CHECK(whole.dimension == 1);
  CHECK(whole.vertex_ids == std::vector<std::size_t>{0, 1});
  const auto m1 = face_from_graph(c4(), ones(c4()), EdgeSet(4, {0, 2}));
  CHECK(m1.dimension == 0);
  CHECK(m1.vertex_ids.size() == 1);
  const auto k = face_from_graph(k3(), ones(k3()), k3().all_edges());
  CHECK(k.dimension == 0);
  CHECK(k.vertex_ids.size() == 1);
  CHECK_THROWS_AS(face_from_graph(c4(), ones(c4()), EdgeSet(4, {0})), PreconditionError);
}

TEST_CASE("meets and joins") {
  const auto g = c4();
  const auto b = ones(g);
  const EdgeSet m1(4, {0, 2}), m2(4, {1, 3});
  CHECK(lattice_meet(g, b, std::vector<EdgeSet>{m1, m2}).empty());
  CHECK(lattice_meet(g, b, std::vector<EdgeSet>{g.all_edges(), m1}) == m1);
  CHECK(lattice_meet(g, b, std::vector<EdgeSet>{}) == polytope_graph(g, b));
  CHECK_THROWS_AS(lattice_meet(g, b, std::vector<EdgeSet>{EdgeSet(4, {0})}), PreconditionError);

  CHECK(lattice_join(g, std::vector<EdgeSet>{m1, m2}) == g.all_edges());
  CHECK(lattice_join(g, std::vector<EdgeSet>{m1}) == m1);
  CHECK(lattice_join(g, std::vector<EdgeSet>{}).empty());
  CHECK_THROWS_AS(lattice_join(g, std::vector<EdgeSet>{EdgeSet(3)}), PreconditionError);

  const auto t = twin2();
  CHECK(lattice_join(t, std::vector<EdgeSet>{EdgeSet(4, {0, 2}), EdgeSet(4, {0, 3})}).count() == 3);
}

TEST_CASE("lattice export") {
  const auto lattice = build_face_lattice(c4(), ones(c4()));
  CHECK(lattice.faces.size() == 4);
  CHECK(lattice.covers.size() == 4);
  CHECK(lattice.faces[lattice.bottom].graph.empty());
  CHECK(lattice.faces[lattice.top].graph == c4().all_edges());
  const auto dot = to_dot(c4(), lattice);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("f0 -> f1") != std::string::npos);
}

TEST_CASE("face lattice matches the oracle on the small family") {
  for (const auto& g : small_family(3, 4)) {
    const auto report = analyze_components(g);
    const bool bipartite = report.bipartite_count == report.components.size();
    for (const auto& values : all_b_vectors(g.vertex_count())) {
      const BVector b(g, values);
      if (b.is_zero()) continue;
      const auto lattice = build_face_lattice(g, b);
      const auto oracle = oracle_face_lattice(g, b);
      REQUIRE(lattice.faces.size() == oracle.faces.size());
      for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
        const auto& f = lattice.faces[i];
        CHECK(f.graph == oracle.faces[i].support);
        CHECK(f.vertex_ids == oracle.faces[i].vertices);
        CHECK(f.dimension == oracle.faces[i].dimension);
        // vertex sets are closed under support containment
        EdgeSet joint(g.edge_count());
        for (std::size_t v : f.vertex_ids) joint |= lattice.vertices[v].support;
        CHECK(joint == f.graph);
      }
      // meet and join stay inside the lattice
      for (const auto& f1 : lattice.faces)
        for (const auto& f2 : lattice.faces) {
          const std::vector<EdgeSet> pair{f1.graph, f2.graph};
          const EdgeSet join = lattice_join(g, pair);
          const EdgeSet meet = lattice_meet(g, b, pair);
          const auto in_lattice = [&](const EdgeSet& h) {
            return std::any_of(lattice.faces.begin(), lattice.faces.end(),
                               [&](const FaceDescriptor& f) { return f.graph == h; });
          };
          CHECK(in_lattice(join));
          CHECK(in_lattice(meet));
          CHECK(meet.is_subset_of(f1.graph & f2.graph));
        }
      // membership by the balance condition agrees with union membership, every subgraph
      for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
        EdgeSet h(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e)
          if (mask >> e & 1u) h.insert(e);
        const bool member = std::any_of(lattice.faces.begin(), lattice.faces.end(),
                                        [&](const FaceDescriptor& f) { return f.graph == h; });
        CHECK(is_face_graph(g, b, h) == member);
        if (bipartite && !h.empty())
          CHECK(!positivity_cover_violation(g.spanning_subgraph(h), b).has_value() == member);
      }
    }
  }
}

TEST_CASE("DOT labels escape quotes in edge ids") {
  const auto g = make_graph(2, std::vector<std::tuple<std::string, int, int>>{{"a\"b", 1, 2}});
  const auto dot = to_dot(g, build_face_lattice(g, ones(g)));
  CHECK(dot.find("{a\\\"b}") != std::string::npos);
}
