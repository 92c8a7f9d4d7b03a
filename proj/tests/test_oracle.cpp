#include <doctest.h>

#include "fpbm/error.hpp"
#include "fpbm/oracle.hpp"
#include "support/fixtures.hpp"

using namespace fpbm;
using namespace fpbm::testing;

TEST_CASE("oracle vertex fixtures") {
  CHECK(oracle_vertices(c4(), ones(c4())) ==
        std::vector<EdgeVector>{q({"1", "0", "1", "0"}), q({"0", "1", "0", "1"})});
  CHECK(oracle_vertices(k3(), ones(k3())) == std::vector<EdgeVector>{q({"1/2", "1/2", "1/2"})});
  CHECK(oracle_vertices(p3(), ones(p3())).empty());
}

TEST_CASE("oracle midpoint test") {
  CHECK(oracle_is_vertex(k3(), ones(k3()), q({"1/2", "1/2", "1/2"})));
  CHECK_FALSE(oracle_is_vertex(c4(), ones(c4()), q({"1/2", "1/2", "1/2", "1/2"})));
  CHECK(oracle_is_vertex(p3(), b_of(p3(), {"1", "2", "1"}), q({"1", "1"})));
  CHECK_THROWS_AS(oracle_is_vertex(p3(), ones(p3()), q({"1", "1"})), PreconditionError);
}

TEST_CASE("oracle dimension") {
  CHECK(oracle_dimension(std::vector<EdgeVector>{q({"1", "0", "1", "0"}), q({"0", "1", "0", "1"})}) == 1);
  CHECK(oracle_dimension(std::vector<EdgeVector>{q({"1/2", "1/2"})}) == 0);
  CHECK(oracle_dimension(std::vector<EdgeVector>{}) == -1);
  CHECK(oracle_dimension(oracle_vertices(twin2(), ones(twin2()))) == 2);
}

TEST_CASE("oracle face lattices") {
  const auto c = oracle_face_lattice(c4(), ones(c4()));
  CHECK(c.faces.size() == 4);
  CHECK(c.adjacency[0][1]);
  const auto t = oracle_face_lattice(twin2(), ones(twin2()));
  CHECK(t.faces.size() == 10);
  std::size_t adjacent_pairs = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) adjacent_pairs += t.adjacency[i][j];
  CHECK(adjacent_pairs == 4);
  CHECK(oracle_face_lattice(k3(), ones(k3())).faces.size() == 2);
  CHECK_THROWS_AS(oracle_face_lattice(k3(), BVector::zeros(k3())), PreconditionError);
}

TEST_CASE("oracle internal consistency: midpoint test accepts exactly the basic solutions") {
  for (const auto& g : small_family(3, 3)) {
    for (const auto& values : all_b_vectors(g.vertex_count())) {
      const BVector b(g, values);
      const auto vs = oracle_vertices(g, b);
      for (const auto& v : vs) CHECK(oracle_is_vertex(g, b, v));
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          EdgeVector mid(g.edge_count());
          for (std::size_t e = 0; e < mid.size(); ++e) mid[e] = (vs[i][e] + vs[j][e]) / 2;
          CHECK_FALSE(oracle_is_vertex(g, b, mid));
        }
    }
  }
}
