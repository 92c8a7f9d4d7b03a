#include <doctest.h>

#include "fpbm/error.hpp"
#include "fpbm/graph_io.hpp"
#include "support/fixtures.hpp"

using namespace fpbm;
using namespace fpbm::testing;

TEST_CASE("rationals in JSON") {
  CHECK(rational_from_json(Json("3/2")) == Rational(3, 2));
  CHECK(rational_from_json(Json(4)) == Rational(4));
  CHECK(rational_from_json(Json("-6/4")) == Rational(-3, 2));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ValidationError);
  CHECK_THROWS_AS(rational_from_json(Json(true)), ValidationError);
  CHECK_THROWS_AS(rational_from_json(Json("1.5")), ValidationError);
  CHECK(rational_to_json(Rational(-7, 3)) == Json("-7/3"));
  CHECK(rational_to_json(Rational(2)) == Json("2"));
}

TEST_CASE("graph documents") {
  const Json doc = Json::parse(R"({"vertices": ["a", "b"],
    "edges": [{"id": "e", "ends": ["a", "b"]}, {"id": "l", "ends": ["b", "b"]}],
    "b": {"a": "1", "b": "5/2"}})");
  const auto built = graph_from_json(doc);
  CHECK(built.graph.vertex_count() == 2);
  CHECK(built.graph.edge(1).is_loop());
  CHECK(built.b[1] == Rational(5, 2));
  CHECK(graph_to_json(built.graph, built.b) == doc);

  const Json missing_b = Json::parse(R"({"vertices": ["a"], "edges": []})");
  CHECK(graph_from_json(missing_b).b.is_zero());

  for (const char* bad : {R"({"vertices": [], "edges": []})",
                          R"({"vertices": ["a"], "edges": [{"id": "e", "ends": ["a", "z"]}]})",
                          R"({"vertices": ["a"], "edges": [{"id": "e", "ends": ["a"]}]})",
                          R"({"vertices": ["a", "a"], "edges": []})",
                          R"({"vertices": ["a"], "edges": [], "b": {"a": "-1"}})",
                          R"({"vertices": ["a"], "edges": [], "b": {"a": 0.5}})",
                          R"({"vertices": ["a"], "edges": [], "b": {"q": "1"}})",
                          R"([1, 2])"})
    CHECK_THROWS_AS(graph_from_json(Json::parse(bad)), ValidationError);
}

TEST_CASE("round trip is exact on the family") {
  for (const auto& g : small_family(3, 3))
    for (const auto& values : all_b_vectors(g.vertex_count())) {
      const BVector b(g, values);
      const Json doc = graph_to_json(g, b);
      const auto back = graph_from_json(Json::parse(doc.dump()));
      CHECK(graph_to_json(back.graph, back.b).dump() == doc.dump());
    }
}

TEST_CASE("edge vectors and demands") {
  const auto g = c4();
  const auto x = q({"1", "0", "1/3", "0"});
  const Json doc = edge_vector_to_json(g, x);
  CHECK(edge_vector_from_json(g, doc) == x);
  CHECK(edge_vector_from_json(g, Json{{"point", doc}}) == x);
  CHECK(edge_vector_from_json(g, Json{{"e1", "2"}}) == q({"2", "0", "0", "0"}));
  CHECK_THROWS_AS(edge_vector_from_json(g, Json{{"nope", "1"}}), ValidationError);
  CHECK(demand_from_json(g, Json{{"demand", {{"v2", "3"}}}}) == q({"0", "3", "0", "0"}));
  CHECK(demand_from_json(g, Json{{"v1", "-1"}}) == q({"-1", "0", "0", "0"}));
}
