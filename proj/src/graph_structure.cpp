#include "fpbm/graph_structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "fpbm/error.hpp"

namespace fpbm {

ComponentReport analyze_components(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  ComponentReport report;
  report.component_of.assign(n, unset);
  report.depth.assign(n, 0);
  report.parent_edge.assign(n, std::nullopt);

  for (std::size_t root = 0; root < n; ++root) {
    if (report.component_of[root] != unset) continue;
    const std::size_t id = report.components.size();
    Component comp;
    std::deque<std::size_t> queue{root};
    report.component_of[root] = id;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      comp.vertices.push_back(v);
      for (std::size_t e : g.incident(v)) {
        const std::size_t w = g.edge(e).other(v);
        if (report.component_of[w] == unset) {
          report.component_of[w] = id;
          report.depth[w] = report.depth[v] + 1;
          report.parent_edge[w] = e;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    for (std::size_t v : comp.vertices)
      for (std::size_t e : g.incident(v))
        if (g.edge(e).u == v) comp.edges.push_back(e);
    std::sort(comp.edges.begin(), comp.edges.end());
    for (std::size_t e : comp.edges) {
      const Edge& ed = g.edge(e);
      if (report.depth[ed.u] % 2 == report.depth[ed.w] % 2) comp.bipartite = false;
    }
    if (comp.bipartite)
      for (std::size_t v : comp.vertices)
        (report.depth[v] % 2 == 0 ? comp.part_u : comp.part_w).push_back(v);
    comp.excess = static_cast<std::ptrdiff_t>(comp.edges.size()) -
                  static_cast<std::ptrdiff_t>(comp.vertices.size());
    if (comp.bipartite) ++report.bipartite_count;
    report.components.push_back(std::move(comp));
  }
  return report;
}

RatMatrix incidence_matrix(const MultiGraph& g) {
  std::vector<std::string> cols;
  cols.reserve(g.edge_count());
  for (const Edge& e : g.edges()) cols.push_back(e.id);
  RatMatrix m(g.vertex_ids(), std::move(cols));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    m(g.edge(e).u, e) = 1;
    m(g.edge(e).w, e) = 1;
  }
  return m;
}

std::size_t incidence_nullity(const MultiGraph& g) {
  const auto report = analyze_components(g);
  const std::size_t nullity = g.edge_count() + report.bipartite_count - g.vertex_count();
  FPBM_CROSS_CHECK(rank_nullity(incidence_matrix(g)).nullity == nullity,
                   "incidence nullity formula vs elimination");
  return nullity;
}

std::string_view to_string(CycleClass c) {
  switch (c) {
    case CycleClass::Acyclic: return "Acyclic";
    case CycleClass::OddUnicyclic: return "OddUnicyclic";
    case CycleClass::EvenUnicyclic: return "EvenUnicyclic";
    case CycleClass::TwoCyclesOneOdd: return "TwoCyclesOneOdd";
    case CycleClass::OneEvenTwoOddSharing: return "OneEvenTwoOddSharing";
    case CycleClass::Higher: return "Higher";
  }
  return "?";
}

namespace {

// Edges of the cycle closed by non-forest edge f in the breadth-first forest.
EdgeSet fundamental_cycle(const MultiGraph& g, const ComponentReport& r, std::size_t f) {
  EdgeSet cycle(g.edge_count());
  cycle.insert(f);
  std::size_t a = g.edge(f).u;
  std::size_t b = g.edge(f).w;
  while (a != b) {
    if (r.depth[a] < r.depth[b]) std::swap(a, b);
    const std::size_t e = *r.parent_edge[a];
    cycle.insert(e);
    a = g.edge(e).other(a);
  }
  return cycle;
}

bool is_forest_edge(const ComponentReport& r, const MultiGraph& g, std::size_t e) {
  const Edge& ed = g.edge(e);
  return (r.parent_edge[ed.u] == e) || (r.parent_edge[ed.w] == e);
}

CycleClass classify_component(const MultiGraph& g, const ComponentReport& r, const Component& c) {
  if (c.excess < 0) return CycleClass::Acyclic;
  if (c.excess == 0) return c.bipartite ? CycleClass::EvenUnicyclic : CycleClass::OddUnicyclic;
  if (c.excess > 1 || c.bipartite) return CycleClass::Higher;

  // Cyclomatic number 2: the two fundamental cycles share an edge exactly when
  // the cycle structure is a theta (three cycles), otherwise there are two cycles.
  std::vector<EdgeSet> fundamentals;
  for (std::size_t e : c.edges)
    if (!is_forest_edge(r, g, e)) fundamentals.push_back(fundamental_cycle(g, r, e));
  if (fundamentals.size() != 2) throw InternalError("excess-1 component without two chords");
  const bool share = !(fundamentals[0] & fundamentals[1]).empty();
  return share ? CycleClass::OneEvenTwoOddSharing : CycleClass::TwoCyclesOneOdd;
}

}  // namespace

std::vector<CycleClass> classify_cycle_structure(const MultiGraph& g,
                                                 const ComponentReport& report) {
  std::vector<CycleClass> tags;
  tags.reserve(report.components.size());
  for (const auto& c : report.components) {
    const CycleClass tag = classify_component(g, report, c);
#ifdef FPBM_CROSS_CHECKS
    if (c.excess <= 1 && c.edges.size() <= 12)
      FPBM_CROSS_CHECK(cycle_content_matches(g, c, tag), "cycle class vs cycle enumeration");
#endif
    tags.push_back(tag);
  }
  return tags;
}

std::vector<CycleClass> classify_cycle_structure(const MultiGraph& g) {
  return classify_cycle_structure(g, analyze_components(g));
}

bool is_pseudoforest_of_odd_cycles(const MultiGraph& g) {
  const auto tags = classify_cycle_structure(g);
  return std::all_of(tags.begin(), tags.end(), has_zero_nullity);
}

std::vector<EdgeSet> enumerate_simple_cycles(const MultiGraph& g, const Component& c,
                                             std::size_t max_edges) {
  if (c.edges.size() > max_edges)
    throw CapExceeded("cycle-enumeration edges", max_edges, c.edges.size());
  std::vector<EdgeSet> cycles;
  const std::size_t m = c.edges.size();
  std::vector<int> degree(g.vertex_count());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) chosen.push_back(c.edges[i]);
    if (chosen.size() == 1) {
      if (g.edge(chosen[0]).is_loop()) cycles.push_back(EdgeSet(g.edge_count(), {chosen[0]}));
      continue;
    }
    bool ok = true;
    std::fill(degree.begin(), degree.end(), 0);
    for (std::size_t e : chosen) {
      if (g.edge(e).is_loop()) {
        ok = false;
        break;
      }
      ++degree[g.edge(e).u];
      ++degree[g.edge(e).w];
    }
    if (!ok) continue;
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; }))
      continue;
    // Connected: walk from the first chosen edge.
    std::vector<bool> used(chosen.size(), false);
    std::size_t start = g.edge(chosen[0]).u, at = start, walked = 0;
    std::optional<std::size_t> prev;
    do {
      std::size_t next = chosen.size();
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        const Edge& ed = g.edge(chosen[i]);
        if (!used[i] && (ed.u == at || ed.w == at) && (!prev || i != *prev)) {
          next = i;
          break;
        }
      }
      if (next == chosen.size()) break;
      used[next] = true;
      prev = next;
      at = g.edge(chosen[next]).other(at);
      ++walked;
    } while (at != start);
    if (walked == chosen.size()) cycles.push_back(EdgeSet::from_members(g.edge_count(), chosen));
  }
  return cycles;
}

bool cycle_content_matches(const MultiGraph& g, const Component& c, CycleClass tag) {
  const auto cycles = enumerate_simple_cycles(g, c);
  std::size_t odd = 0;
  for (const auto& cy : cycles)
    if (cy.count() % 2 == 1) ++odd;
  const std::size_t even = cycles.size() - odd;
  bool pairwise_share = true;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if ((cycles[i] & cycles[j]).empty()) pairwise_share = false;

  const bool acyclic = cycles.empty();
  const bool odd_uni = cycles.size() == 1 && odd == 1;
  const bool even_uni = cycles.size() == 1 && even == 1;
  const bool two = cycles.size() == 2 && odd >= 1;
  const bool theta = cycles.size() == 3 && even == 1 && odd == 2 && pairwise_share;
  switch (tag) {
    case CycleClass::Acyclic: return acyclic;
    case CycleClass::OddUnicyclic: return odd_uni;
    case CycleClass::EvenUnicyclic: return even_uni;
    case CycleClass::TwoCyclesOneOdd: return two;
    case CycleClass::OneEvenTwoOddSharing: return theta;
    case CycleClass::Higher: return !(acyclic || odd_uni || even_uni || two || theta);
  }
  return false;
}

EdgeSet canonical_core(const MultiGraph& g, const ComponentReport& report) {
  EdgeSet core(g.edge_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (report.parent_edge[v]) core.insert(*report.parent_edge[v]);
  for (const auto& c : report.components) {
    if (c.bipartite) continue;
    for (std::size_t e : c.edges) {
      const Edge& ed = g.edge(e);
      if (!core.contains(e) && report.depth[ed.u] % 2 == report.depth[ed.w] % 2) {
        core.insert(e);
        break;
      }
    }
  }
  return core;
}

EdgeSet canonical_core(const MultiGraph& g) { return canonical_core(g, analyze_components(g)); }

std::optional<EdgeVector> solve_by_peeling(const MultiGraph& g, std::span<const Rational> a) {
  if (a.size() != g.vertex_count()) throw ValidationError("demand vector size mismatch");
  const std::size_t n = g.vertex_count();
  std::vector<Rational> residual(a.begin(), a.end());
  std::vector<bool> alive(g.edge_count(), true);
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : g.edges()) {
    degree[e.u] += 1;
    degree[e.w] += 1;  // a loop counts twice here
  }
  EdgeVector x(g.edge_count());

  std::deque<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    const std::size_t v = leaves.front();
    leaves.pop_front();
    if (degree[v] != 1) continue;
    std::size_t edge = g.edge_count();
    for (std::size_t e : g.incident(v))
      if (alive[e]) edge = e;
    const std::size_t w = g.edge(edge).other(v);
    x[edge] = residual[v];
    residual[w] -= residual[v];
    residual[v] = 0;
    alive[edge] = false;
    degree[v] = 0;
    if (--degree[w] == 1) leaves.push_back(w);
  }

  std::vector<bool> done(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 0) {
      if (sgn(residual[v]) != 0) return std::nullopt;  // unbalanced tree component
      done[v] = true;
    } else if (degree[v] != 2) {
      return std::nullopt;  // more than one cycle in a component
    }
  }

  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    // Walk the cycle through `start`, recording vertices and edges in order.
    std::vector<std::size_t> verts{start}, cyc;
    std::size_t at = start;
    std::optional<std::size_t> prev;
    while (true) {
      std::size_t next = g.edge_count();
      for (std::size_t e : g.incident(at))
        if (alive[e] && e != prev) {
          next = e;
          break;
        }
      cyc.push_back(next);
      prev = next;
      at = g.edge(next).other(at);
      if (at == start) break;
      verts.push_back(at);
    }
    for (std::size_t v : verts) done[v] = true;
    const std::size_t len = cyc.size();
    if (len == 1) {
      x[cyc[0]] = residual[start];  // a loop contributes once to its vertex
      continue;
    }
    if (len % 2 == 0) return std::nullopt;  // even cycle: not unique
    // x_{e_i} = c_i + (-1)^i t, closing the system at the start vertex.
    std::vector<Rational> c(len);
    for (std::size_t i = 1; i < len; ++i) c[i] = residual[verts[i]] - c[i - 1];
    const Rational t = (residual[verts[0]] - c[len - 1]) / 2;
    for (std::size_t i = 0; i < len; ++i) x[cyc[i]] = i % 2 == 0 ? Rational(c[i] + t) : Rational(c[i] - t);
  }

  FPBM_CROSS_CHECK(vertex_sums(g, x) == RationalVector(a.begin(), a.end()),
                   "peeling solution substitution");
  return x;
}

std::vector<EdgeVector> kernel_basis(const MultiGraph& g) {
  const auto report = analyze_components(g);
  const EdgeSet core = canonical_core(g, report);
  const MultiGraph core_graph = g.spanning_subgraph(core);
  const auto core_edges = core.members();

  std::vector<EdgeVector> basis;
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (core.contains(f)) continue;
    DemandVector demand(g.vertex_count());
    demand[g.edge(f).u] -= 1;
    if (!g.edge(f).is_loop()) demand[g.edge(f).w] -= 1;
    const auto y = solve_by_peeling(core_graph, demand);
    if (!y) throw InternalError("core subgraph does not admit a unique solve");

    EdgeVector x(g.edge_count());
    x[f] = 1;
    for (std::size_t i = 0; i < core_edges.size(); ++i) x[core_edges[i]] = (*y)[i];
    mpz_class scale = 1;
    for (const auto& q : x) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    for (auto& q : x) q *= scale;
#ifdef FPBM_CROSS_CHECKS
    const auto sums = vertex_sums(g, x);
    FPBM_CROSS_CHECK(std::all_of(sums.begin(), sums.end(),
                                 [](const Rational& q) { return sgn(q) == 0; }),
                     "kernel vector balance");
#endif
    basis.push_back(std::move(x));
  }
  FPBM_CROSS_CHECK(basis.size() == g.edge_count() + report.bipartite_count - g.vertex_count(),
                   "kernel basis size");
  return basis;
}

}  // namespace fpbm
