#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fpbm/edge_set.hpp"
#include "fpbm/error.hpp"
#include "fpbm/multigraph.hpp"

namespace fpbm {

struct VertexPoint {
  EdgeVector coords;
  EdgeSet support;  ///< gr(u)
};

/// All vertices of P(G,b), sorted by support in EdgeSet order.
std::vector<VertexPoint> enumerate_vertices(const MultiGraph& g, const BVector& b,
                                            const Limits& limits = Limits::enumeration());

/// The only element of P(G,b) whose support is exactly H, if there is one.
std::optional<EdgeVector> vertex_from_graph(const MultiGraph& g, const BVector& b, const EdgeSet& h);

enum class VertexTest {
  Vertex,
  NotVertex,       ///< in the polytope, but gr(x) has an even cycle or two cycles
  WrongLength,
  Negative,
  DegreeMismatch,  ///< some vertex sum differs from b
};

std::string_view to_string(VertexTest t);

VertexTest vertex_test(const MultiGraph& g, const BVector& b, std::span<const Rational> x);
inline bool is_vertex(const MultiGraph& g, const BVector& b, std::span<const Rational> x) {
  return vertex_test(g, b, x) == VertexTest::Vertex;
}

/// gr(P(G,b)): union of the vertex supports; empty for an empty polytope.
EdgeSet polytope_graph(const MultiGraph& g, const BVector& b,
                       const Limits& limits = Limits::enumeration());

struct PolytopeSummary {
  bool nonempty = false;
  long dimension = -1;
  EdgeSet graph;
  std::size_t bipartite_count = 0;  ///< B of the polytope graph
};

PolytopeSummary summarize(const MultiGraph& g, const BVector& b,
                          const Limits& limits = Limits::enumeration());
PolytopeSummary summarize(const MultiGraph& g, std::span<const VertexPoint> vertices);

/// -1 for the empty polytope.
long dimension(const MultiGraph& g, const BVector& b, const Limits& limits = Limits::enumeration());

/// |E_H| - |V| + B(H) for a spanning subgraph H.
long subgraph_dimension(const MultiGraph& g, const EdgeSet& h);

/// Whether two distinct vertices span an edge of P(G,b). Throws PreconditionError
/// unless both are vertices and they differ.
bool is_edge_pair(const MultiGraph& g, const BVector& b, std::span<const Rational> u,
                  std::span<const Rational> w);

}  // namespace fpbm
