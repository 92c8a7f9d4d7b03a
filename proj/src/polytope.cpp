#include "fpbm/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "fpbm/flow_solver.hpp"
#include "fpbm/graph_structure.hpp"

namespace fpbm {

namespace {

// Union-find with parity and a per-root cycle flag: the state of a partial
// support whose components are all acyclic or odd-unicyclic.
struct ParityForest {
  std::vector<std::size_t> parent;
  std::vector<unsigned char> parity;  ///< parity relative to parent
  std::vector<unsigned char> cyclic;  ///< valid at roots

  explicit ParityForest(std::size_t n) : parent(n), parity(n, 0), cyclic(n, 0) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::pair<std::size_t, unsigned char> find(std::size_t v) const {
    unsigned char p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return {v, p};
  }

  /// False if the edge would close an even cycle or a second cycle.
  bool add(std::size_t u, std::size_t w) {
    const auto [ru, pu] = find(u);
    const auto [rw, pw] = find(w);
    if (ru == rw) {
      if (cyclic[ru] || pu != pw) return false;
      cyclic[ru] = 1;
      return true;
    }
    if (cyclic[ru] && cyclic[rw]) return false;
    parent[rw] = ru;
    parity[rw] = static_cast<unsigned char>(pu ^ pw ^ 1);
    cyclic[ru] = static_cast<unsigned char>(cyclic[ru] | cyclic[rw]);
    return true;
  }
};

struct VertexSearch {
  const MultiGraph& g;
  const BVector& b;
  std::vector<std::size_t> usable;  ///< edges with both endpoints of positive b
  std::vector<VertexPoint> found;

  void run(std::size_t pos, ParityForest forest, std::vector<std::size_t>& chosen,
           std::vector<int>& cover, std::size_t uncovered) {
    if (uncovered == 0) {
      EdgeSet h = EdgeSet::from_members(g.edge_count(), chosen);
      if (auto x = vertex_from_graph(g, b, h)) found.push_back({std::move(*x), std::move(h)});
    }
    for (std::size_t i = pos; i < usable.size(); ++i) {
      const Edge& e = g.edge(usable[i]);
      ParityForest next = forest;
      if (!next.add(e.u, e.w)) continue;
      chosen.push_back(usable[i]);
      std::size_t newly = 0;
      if (cover[e.u]++ == 0) ++newly;
      if (!e.is_loop() && cover[e.w]++ == 0) ++newly;
      run(i + 1, std::move(next), chosen, cover, uncovered - newly);
      --cover[e.u];
      if (!e.is_loop()) --cover[e.w];
      chosen.pop_back();
    }
  }
};

}  // namespace

std::optional<EdgeVector> vertex_from_graph(const MultiGraph& g, const BVector& b, const EdgeSet& h) {
  const MultiGraph sub = g.spanning_subgraph(h);
  if (!is_pseudoforest_of_odd_cycles(sub)) return std::nullopt;
  if (flow_balance_check(sub, b.values())) return std::nullopt;
  const EdgeVector local = unique_solve(sub, b.values());
  if (std::any_of(local.begin(), local.end(), [](const Rational& q) { return sgn(q) <= 0; }))
    return std::nullopt;
  EdgeVector x(g.edge_count());
  const auto members = h.members();
  for (std::size_t i = 0; i < members.size(); ++i) x[members[i]] = local[i];
  if (!in_polytope(g, b, x)) return std::nullopt;
  return x;
}

std::vector<VertexPoint> enumerate_vertices(const MultiGraph& g, const BVector& b,
                                            const Limits& limits) {
  check_vertex_cap(g.vertex_count(), limits);
  check_edge_cap(g.edge_count(), limits);
  if (b.size() != g.vertex_count()) throw ValidationError("b does not match the graph");

  VertexSearch search{g, b, {}, {}};
  // An edge at a vertex with b_v = 0 is zero at every point of the polytope.
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (sgn(b[g.edge(e).u]) > 0 && sgn(b[g.edge(e).w]) > 0) search.usable.push_back(e);
  std::size_t uncovered = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (sgn(b[v]) > 0) ++uncovered;
  std::vector<std::size_t> chosen;
  std::vector<int> cover(g.vertex_count(), 0);
  search.run(0, ParityForest(g.vertex_count()), chosen, cover, uncovered);

  std::sort(search.found.begin(), search.found.end(),
            [](const VertexPoint& a, const VertexPoint& c) { return a.support < c.support; });
  return std::move(search.found);
}

std::string_view to_string(VertexTest t) {
  switch (t) {
    case VertexTest::Vertex: return "vertex";
    case VertexTest::NotVertex: return "not-vertex";
    case VertexTest::WrongLength: return "wrong-length";
    case VertexTest::Negative: return "negative-entry";
    case VertexTest::DegreeMismatch: return "degree-mismatch";
  }
  return "?";
}

VertexTest vertex_test(const MultiGraph& g, const BVector& b, std::span<const Rational> x) {
  if (x.size() != g.edge_count()) return VertexTest::WrongLength;
  if (std::any_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) < 0; }))
    return VertexTest::Negative;
  const auto sums = vertex_sums(g, x);
  if (!std::equal(sums.begin(), sums.end(), b.values().begin())) return VertexTest::DegreeMismatch;
  return is_pseudoforest_of_odd_cycles(g.spanning_subgraph(support(x))) ? VertexTest::Vertex
                                                                        : VertexTest::NotVertex;
}

long subgraph_dimension(const MultiGraph& g, const EdgeSet& h) {
  const auto report = analyze_components(g.spanning_subgraph(h));
  return static_cast<long>(h.count()) - static_cast<long>(g.vertex_count()) +
         static_cast<long>(report.bipartite_count);
}

PolytopeSummary summarize(const MultiGraph& g, std::span<const VertexPoint> vertices) {
  PolytopeSummary s;
  s.graph = EdgeSet(g.edge_count());
  if (vertices.empty()) return s;
  s.nonempty = true;
  for (const auto& v : vertices) s.graph |= v.support;
  s.bipartite_count = analyze_components(g.spanning_subgraph(s.graph)).bipartite_count;
  s.dimension = static_cast<long>(s.graph.count()) - static_cast<long>(g.vertex_count()) +
                static_cast<long>(s.bipartite_count);
  return s;
}

PolytopeSummary summarize(const MultiGraph& g, const BVector& b, const Limits& limits) {
  const auto vertices = enumerate_vertices(g, b, limits);
  return summarize(g, vertices);
}

EdgeSet polytope_graph(const MultiGraph& g, const BVector& b, const Limits& limits) {
  return summarize(g, b, limits).graph;
}

long dimension(const MultiGraph& g, const BVector& b, const Limits& limits) {
  return summarize(g, b, limits).dimension;
}

bool is_edge_pair(const MultiGraph& g, const BVector& b, std::span<const Rational> u,
                  std::span<const Rational> w) {
  if (!is_vertex(g, b, u) || !is_vertex(g, b, w))
    throw PreconditionError("edge test needs two vertices of the polytope");
  if (std::equal(u.begin(), u.end(), w.begin(), w.end()))
    throw PreconditionError("edge test needs two distinct vertices");
  const MultiGraph joint = g.spanning_subgraph(support(u) | support(w));
  const auto tags = classify_cycle_structure(joint);
  const auto unit = std::count_if(tags.begin(), tags.end(), has_unit_nullity);
  const auto zero = std::count_if(tags.begin(), tags.end(), has_zero_nullity);
  const bool adjacent = unit == 1 && zero + 1 == static_cast<long>(tags.size());
  FPBM_CROSS_CHECK(adjacent == (incidence_nullity(joint) == 1), "edge test vs union nullity");
  return adjacent;
}

}  // namespace fpbm
