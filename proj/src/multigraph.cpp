#include "fpbm/multigraph.hpp"

#include <algorithm>
#include <set>

#include "fpbm/error.hpp"

namespace fpbm {

MultiGraph::MultiGraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges) {
  if (vertices.empty()) throw ValidationError("graph must have at least one vertex");
  auto table = std::make_shared<VertexTable>();
  table->ids = std::move(vertices);
  for (std::size_t i = 0; i < table->ids.size(); ++i)
    if (!table->index.emplace(table->ids[i], i).second)
      throw ValidationError("duplicate vertex id '" + table->ids[i] + "'");
  vertices_ = table;

  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    const auto u = find_vertex(spec.u);
    const auto w = find_vertex(spec.w);
    if (!u || !w)
      throw ValidationError("edge '" + spec.id + "' has unknown endpoint '" +
                            (u ? spec.w : spec.u) + "'");
    if (vertices_->index.contains(spec.id))
      throw ValidationError("edge id '" + spec.id + "' collides with a vertex id");
    edges_.push_back({spec.id, *u, *w});
  }
  index_edges();
}

MultiGraph::MultiGraph(std::shared_ptr<const VertexTable> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  index_edges();
}

void MultiGraph::index_edges() {
  edge_index_.clear();
  incident_.assign(vertex_count(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!edge_index_.emplace(edges_[e].id, e).second)
      throw ValidationError("duplicate edge id '" + edges_[e].id + "'");
    incident_[edges_[e].u].push_back(e);
    if (!edges_[e].is_loop()) incident_[edges_[e].w].push_back(e);
  }
}

std::optional<std::size_t> MultiGraph::find_vertex(const VertexId& id) const {
  if (auto it = vertices_->index.find(id); it != vertices_->index.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> MultiGraph::find_edge(const EdgeId& id) const {
  if (auto it = edge_index_.find(id); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

std::size_t MultiGraph::vertex_index(const VertexId& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw ValidationError("unknown vertex id '" + id + "'");
}

std::size_t MultiGraph::edge_index(const EdgeId& id) const {
  if (auto e = find_edge(id)) return *e;
  throw ValidationError("unknown edge id '" + id + "'");
}

MultiGraph MultiGraph::spanning_subgraph(const EdgeSet& subset) const {
  if (subset.host_size() != edge_count())
    throw PreconditionError("edge set does not belong to this graph");
  std::vector<Edge> kept;
  kept.reserve(subset.count());
  for (std::size_t e : subset.members()) kept.push_back(edges_[e]);
  return MultiGraph(vertices_, std::move(kept));
}

BVector::BVector(const MultiGraph& g, RationalVector values) : values_(std::move(values)) {
  if (values_.size() != g.vertex_count())
    throw ValidationError("b has " + std::to_string(values_.size()) + " entries, graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (sgn(values_[v]) < 0)
      throw ValidationError("negative b entry at vertex '" + g.vertex_id(v) + "'");
}

bool BVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

BuiltGraph build_graph(const GraphSpec& spec) {
  MultiGraph g(spec.vertices, spec.edges);
  RationalVector b(g.vertex_count());
  for (const auto& [id, value] : spec.b) {
    const auto v = g.find_vertex(id);
    if (!v) throw ValidationError("b entry for unknown vertex '" + id + "'");
    b[*v] = value;
  }
  BVector bv(g, std::move(b));
  return {std::move(g), std::move(bv)};
}

Rational sum_over(const BVector& b, std::span<const std::size_t> vertices) {
  Rational total;
  for (std::size_t v : vertices) total += b[v];
  return total;
}

EdgeSet edge_set_between(const MultiGraph& g, std::span<const std::size_t> u,
                         std::span<const std::size_t> w) {
  std::vector<bool> in_u(g.vertex_count()), in_w(g.vertex_count());
  for (std::size_t v : u) in_u.at(v) = true;
  for (std::size_t v : w) in_w.at(v) = true;
  EdgeSet out(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if ((in_u[ed.u] && in_w[ed.w]) || (in_u[ed.w] && in_w[ed.u])) out.insert(e);
  }
  return out;
}

EdgeSet edge_set_between(const MultiGraph& g, std::span<const VertexId> u,
                         std::span<const VertexId> w) {
  std::vector<std::size_t> ui, wi;
  for (const auto& id : u) ui.push_back(g.vertex_index(id));
  for (const auto& id : w) wi.push_back(g.vertex_index(id));
  return edge_set_between(g, std::span<const std::size_t>(ui), std::span<const std::size_t>(wi));
}

RatMatrix generalized_adjacency(const MultiGraph& g, std::span<const Rational> x,
                                const std::optional<Bipartition>& bipartition) {
  if (x.size() != g.edge_count()) throw ValidationError("edge vector size mismatch");
  RatMatrix full(g.vertex_ids(), g.vertex_ids());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    full(ed.u, ed.w) += x[e];
    if (!ed.is_loop()) full(ed.w, ed.u) += x[e];
  }
  if (!bipartition) return full;

  std::vector<int> side(g.vertex_count(), -1);
  auto assign = [&](const std::vector<VertexId>& ids, int s) {
    std::vector<std::size_t> out;
    for (const auto& id : ids) {
      const std::size_t v = g.vertex_index(id);
      if (side[v] != -1) throw ValidationError("vertex '" + id + "' listed twice in bipartition");
      side[v] = s;
      out.push_back(v);
    }
    return out;
  };
  const auto us = assign(bipartition->u, 0);
  const auto ws = assign(bipartition->w, 1);
  if (std::find(side.begin(), side.end(), -1) != side.end())
    throw ValidationError("bipartition does not cover every vertex");
  for (const Edge& ed : g.edges())
    if (side[ed.u] == side[ed.w])
      throw ValidationError("edge '" + ed.id + "' does not cross the bipartition");

  RatMatrix block(bipartition->u, bipartition->w);
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) block(i, j) = full(us[i], ws[j]);
  return block;
}

DemandVector vertex_sums(const MultiGraph& g, std::span<const Rational> x) {
  if (x.size() != g.edge_count()) throw ValidationError("edge vector size mismatch");
  DemandVector sums(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    sums[ed.u] += x[e];
    if (!ed.is_loop()) sums[ed.w] += x[e];
  }
  return sums;
}

bool in_polytope(const MultiGraph& g, const BVector& b, std::span<const Rational> x) {
  if (x.size() != g.edge_count() || b.size() != g.vertex_count()) return false;
  for (const auto& q : x)
    if (sgn(q) < 0) return false;
  const auto sums = vertex_sums(g, x);
  for (std::size_t v = 0; v < sums.size(); ++v)
    if (sums[v] != b[v]) return false;
  return true;
}

EdgeSet support(std::span<const Rational> x) {
  EdgeSet s(x.size());
  for (std::size_t e = 0; e < x.size(); ++e)
    if (sgn(x[e]) != 0) s.insert(e);
  return s;
}

}  // namespace fpbm
