#include "fpbm/face_lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fpbm/feasibility.hpp"
#include "fpbm/graph_structure.hpp"

namespace fpbm {

namespace {

constexpr std::size_t kExhaustiveCheckEdges = 10;

void require_nonzero(const BVector& b) {
  if (b.is_zero()) throw PreconditionError("face lattice operations need a nonzero b");
}

void require_host(const MultiGraph& g, const EdgeSet& h) {
  if (h.host_size() != g.edge_count()) throw PreconditionError("edge set does not belong to this graph");
}

std::vector<EdgeSet> unions_of(const MultiGraph& g, std::span<const VertexPoint> vertices) {
  std::set<EdgeSet> seen{EdgeSet(g.edge_count())};
  std::vector<EdgeSet> frontier{EdgeSet(g.edge_count())};
  while (!frontier.empty()) {
    const EdgeSet h = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& v : vertices) {
      if (v.support.is_subset_of(h)) continue;
      EdgeSet bigger = h | v.support;
      if (seen.insert(bigger).second) frontier.push_back(std::move(bigger));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::size_t> vertices_inside(std::span<const VertexPoint> vertices, const EdgeSet& h) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].support.is_subset_of(h)) ids.push_back(i);
  return ids;
}

FaceDescriptor describe(const MultiGraph& g, std::span<const VertexPoint> vertices, const EdgeSet& h) {
  FaceDescriptor f{h, -1, vertices_inside(vertices, h)};
  if (!f.vertex_ids.empty()) f.dimension = subgraph_dimension(g, h);
  return f;
}

}  // namespace

bool is_face_graph(const MultiGraph& g, const BVector& b, const EdgeSet& h, const Limits& limits) {
  require_nonzero(b);
  require_host(g, h);
  check_vertex_cap(g.vertex_count(), limits);
  if (h.empty()) return true;
  const MultiGraph sub = g.spanning_subgraph(h);
  const auto report = analyze_components(sub);
  if (report.bipartite_count == report.components.size()) {
    const bool by_covers = !positivity_cover_violation(sub, b).has_value();
    FPBM_CROSS_CHECK(by_covers == !positivity_violation(sub, b).has_value(),
                     "vertex-cover and tri-partition face conditions");
    return by_covers;
  }
  return !positivity_violation(sub, b).has_value();
}

std::vector<EdgeSet> enumerate_face_graphs(const MultiGraph& g, const BVector& b,
                                           const Limits& limits) {
  require_nonzero(b);
  const auto vertices = enumerate_vertices(g, b, limits);
  auto graphs = unions_of(g, vertices);
#ifdef FPBM_CROSS_CHECKS
  if (g.edge_count() <= kExhaustiveCheckEdges) {
    std::vector<EdgeSet> passing;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
      EdgeSet h(g.edge_count());
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (mask >> e & 1) h.insert(e);
      if (is_face_graph(g, b, h, limits)) passing.push_back(std::move(h));
    }
    std::sort(passing.begin(), passing.end());
    FPBM_CROSS_CHECK(passing == graphs, "face graphs vs balance-condition subgraphs");
  }
#endif
  return graphs;
}

FaceDescriptor face_from_graph(const MultiGraph& g, const BVector& b, const EdgeSet& h,
                               const Limits& limits) {
  require_nonzero(b);
  require_host(g, h);
  if (!is_face_graph(g, b, h, limits)) throw PreconditionError("subgraph is not a face graph");
  const auto vertices = enumerate_vertices(g, b, limits);
  return describe(g, vertices, h);
}

EdgeSet lattice_meet(const MultiGraph& g, const BVector& b, std::span<const EdgeSet> hs,
                     const Limits& limits) {
  require_nonzero(b);
  const auto vertices = enumerate_vertices(g, b, limits);
  EdgeSet common = EdgeSet::full(g.edge_count());
  for (const auto& h : hs) {
    require_host(g, h);
    if (!is_face_graph(g, b, h, limits)) throw PreconditionError("meet member is not a face graph");
    common &= h;
  }
  EdgeSet meet(g.edge_count());
  for (const auto& v : vertices)
    if (v.support.is_subset_of(common)) meet |= v.support;
  return meet;
}

EdgeSet lattice_join(const MultiGraph& g, std::span<const EdgeSet> hs) {
  EdgeSet join(g.edge_count());
  for (const auto& h : hs) {
    require_host(g, h);
    join |= h;
  }
  return join;
}

FaceLattice build_face_lattice(const MultiGraph& g, const BVector& b, const Limits& limits) {
  require_nonzero(b);
  FaceLattice lattice;
  lattice.vertices = enumerate_vertices(g, b, limits);
  for (const auto& h : unions_of(g, lattice.vertices))
    lattice.faces.push_back(describe(g, lattice.vertices, h));

  const std::size_t k = lattice.faces.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !lattice.faces[i].graph.is_subset_of(lattice.faces[j].graph)) continue;
      bool direct = true;
      for (std::size_t m = 0; m < k && direct; ++m)
        if (m != i && m != j && lattice.faces[i].graph.is_subset_of(lattice.faces[m].graph) &&
            lattice.faces[m].graph.is_subset_of(lattice.faces[j].graph))
          direct = false;
      if (direct) lattice.covers.emplace_back(i, j);
    }
  lattice.bottom = 0;
  lattice.top = k - 1;
  return lattice;
}

namespace {

std::string dot_escape(const std::string& id) {
  std::string out;
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const MultiGraph& g, const FaceLattice& lattice) {
  std::ostringstream out;
  out << "digraph face_lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
    const auto& f = lattice.faces[i];
    out << "  f" << i << " [label=\"dim " << f.dimension << "\\n{";
    const auto members = f.graph.members();
    for (std::size_t j = 0; j < members.size(); ++j)
      out << (j ? "," : "") << dot_escape(g.edge(members[j]).id);
    out << "}\"];\n";
  }
  for (const auto& [i, j] : lattice.covers) out << "  f" << i << " -> f" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fpbm
