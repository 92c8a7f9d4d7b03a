#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpbm/edge_set.hpp"
#include "fpbm/matrix.hpp"
#include "fpbm/rational.hpp"

namespace fpbm {

using VertexId = std::string;
using EdgeId = std::string;

/// An edge between canonical vertex indices u and w; u == w is a loop.
struct Edge {
  EdgeId id;
  std::size_t u = 0;
  std::size_t w = 0;

  bool is_loop() const noexcept { return u == w; }
  std::size_t other(std::size_t v) const noexcept { return v == u ? w : u; }
};

struct EdgeSpec {
  EdgeId id;
  VertexId u;
  VertexId w;
};

/// Finite undirected multigraph with loops and parallel edges. Immutable after
/// construction; vertex and edge order is the declaration order.
class MultiGraph {
 public:
  /// Throws ValidationError on an empty vertex list, duplicate ids or unknown endpoints.
  MultiGraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const noexcept { return vertices_->ids.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<VertexId>& vertex_ids() const noexcept { return vertices_->ids; }
  const VertexId& vertex_id(std::size_t v) const { return vertices_->ids.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_vertex(const VertexId& id) const;
  std::optional<std::size_t> find_edge(const EdgeId& id) const;
  /// Throws ValidationError for unknown ids.
  std::size_t vertex_index(const VertexId& id) const;
  std::size_t edge_index(const EdgeId& id) const;

  /// delta(v): edges incident with v, ascending; a loop appears once.
  std::span<const std::size_t> incident(std::size_t v) const { return incident_.at(v); }

  /// Same vertex set, edges restricted to `subset` (ids and relative order kept).
  MultiGraph spanning_subgraph(const EdgeSet& subset) const;
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

 private:
  struct VertexTable {
    std::vector<VertexId> ids;
    std::unordered_map<VertexId, std::size_t> index;
  };

  MultiGraph(std::shared_ptr<const VertexTable> vertices, std::vector<Edge> edges);
  void index_edges();

  std::shared_ptr<const VertexTable> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Nonnegative vertex weights b, total on V.
class BVector {
 public:
  BVector() = default;
  /// Throws ValidationError on a size mismatch or a negative entry.
  BVector(const MultiGraph& g, RationalVector values);
  static BVector zeros(const MultiGraph& g) { return BVector(g, RationalVector(g.vertex_count())); }

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t v) const { return values_[v]; }
  std::span<const Rational> values() const noexcept { return values_; }
  bool is_zero() const;

  friend bool operator==(const BVector&, const BVector&) = default;

 private:
  RationalVector values_;
};

/// Edge weights x, total on E (sign unrestricted).
using EdgeVector = RationalVector;
/// Vertex demands a, total on V (sign unrestricted).
using DemandVector = RationalVector;

/// Human-authorable graph description: ids, endpoints and optional b entries.
struct GraphSpec {
  std::vector<VertexId> vertices;
  std::vector<EdgeSpec> edges;
  std::map<VertexId, Rational> b;
};

struct BuiltGraph {
  MultiGraph graph;
  BVector b;
};

/// Validates `spec`; b entries that are absent default to 0.
BuiltGraph build_graph(const GraphSpec& spec);

/// Sum over `vertices` of b.
Rational sum_over(const BVector& b, std::span<const std::size_t> vertices);

/// G[U,W]: edges with one endpoint in U and the other in W (loops at v in U∩W).
EdgeSet edge_set_between(const MultiGraph& g, std::span<const std::size_t> u,
                         std::span<const std::size_t> w);
EdgeSet edge_set_between(const MultiGraph& g, std::span<const VertexId> u,
                         std::span<const VertexId> w);

struct Bipartition {
  std::vector<VertexId> u;
  std::vector<VertexId> w;
};

/// Generalized adjacency matrix A_G(x); with a bipartition, its U x W block.
/// Throws ValidationError if the bipartition is not one for g.
RatMatrix generalized_adjacency(const MultiGraph& g, std::span<const Rational> x,
                                const std::optional<Bipartition>& bipartition = std::nullopt);

/// Membership in the polytope: x >= 0 and every vertex sum equals b.
bool in_polytope(const MultiGraph& g, const BVector& b, std::span<const Rational> x);
/// I_G x evaluated vertex by vertex.
DemandVector vertex_sums(const MultiGraph& g, std::span<const Rational> x);
/// {e : x_e != 0}
EdgeSet support(std::span<const Rational> x);

}  // namespace fpbm
