#include "fpbm/flow_solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "fpbm/error.hpp"
#include "fpbm/graph_structure.hpp"

namespace fpbm {

std::optional<BalanceViolation> flow_balance_check(const MultiGraph& g,
                                                   std::span<const Rational> a) {
  if (a.size() != g.vertex_count()) throw ValidationError("demand vector size mismatch");
  const auto report = analyze_components(g);
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const Component& c = report.components[i];
    if (!c.bipartite) continue;
    BalanceViolation v{i, c.part_u, c.part_w, 0, 0};
    for (std::size_t u : c.part_u) v.sum_u += a[u];
    for (std::size_t w : c.part_w) v.sum_w += a[w];
    if (v.sum_u != v.sum_w) return v;
  }
  return std::nullopt;
}

namespace {

constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();

// Vertices on a cycle; for graphs with at most one cycle per component this is
// the 2-core. A loop counts twice towards the degree.
std::vector<bool> two_core(const MultiGraph& g) {
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++degree[e.u];
    ++degree[e.w];
  }
  std::vector<bool> in_core(g.vertex_count(), true);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (degree[v] <= 1) queue.push_back(v);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (!in_core[v]) continue;
    in_core[v] = false;
    for (std::size_t e : g.incident(v)) {
      const std::size_t w = g.edge(e).other(v);
      if (in_core[w] && --degree[w] == 1) queue.push_back(w);
    }
  }
  return in_core;
}

// Multi-source breadth-first distance to the nearest cycle vertex.
std::vector<std::size_t> distance_to_cycle(const MultiGraph& g, const std::vector<bool>& core) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (core[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.incident(v)) {
      const std::size_t w = g.edge(e).other(v);
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Sum over the component of t in G \ e of (-1)^{d(v,t)} a_v.
Rational alternating_sum(const MultiGraph& g, std::span<const Rational> a, std::size_t removed,
                         std::size_t t) {
  std::vector<std::size_t> depth(g.vertex_count(), kUnreached);
  std::deque<std::size_t> queue{t};
  depth[t] = 0;
  Rational sum;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (depth[v] % 2 == 0)
      sum += a[v];
    else
      sum -= a[v];
    for (std::size_t e : g.incident(v)) {
      if (e == removed) continue;
      const std::size_t w = g.edge(e).other(v);
      if (depth[w] == kUnreached) {
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return sum;
}

}  // namespace

EdgeVector unique_solve(const MultiGraph& g, std::span<const Rational> a) {
  if (a.size() != g.vertex_count()) throw ValidationError("demand vector size mismatch");
  if (!is_pseudoforest_of_odd_cycles(g))
    throw PreconditionError("unique solve needs acyclic or odd-unicyclic components");
  if (flow_balance_check(g, a)) throw PreconditionError("demand is unbalanced on a bipartite component");

  const auto core = two_core(g);
  const auto dist = distance_to_cycle(g, core);
  EdgeVector x(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      x[e] = alternating_sum(g, a, e, ed.u);
      continue;
    }
    const bool on_cycle = core[ed.u] && core[ed.w];
    const bool in_cyclic_component = dist[ed.u] != kUnreached;
    if (in_cyclic_component && !on_cycle) {
      const std::size_t t = dist[ed.u] > dist[ed.w] ? ed.u : ed.w;
      x[e] = alternating_sum(g, a, e, t);
      continue;
    }
    // Either endpoint is admissible; both are evaluated and must agree.
    const std::size_t t = std::min(ed.u, ed.w);
    const std::size_t other = std::max(ed.u, ed.w);
    Rational value = alternating_sum(g, a, e, t);
    if (value != alternating_sum(g, a, e, other))
      throw InternalError("path-sum value depends on the endpoint choice for edge " + ed.id);
    if (on_cycle) value /= 2;
    x[e] = value;
  }
  if (vertex_sums(g, x) != RationalVector(a.begin(), a.end()))
    throw InternalError("closed-form solution fails substitution");
  return x;
}

FlowResult solve_flow(const MultiGraph& g, std::span<const Rational> a) {
  if (auto violation = flow_balance_check(g, a)) return *violation;
  const EdgeSet core = canonical_core(g);
  const EdgeVector local = unique_solve(g.spanning_subgraph(core), a);
  EdgeVector x(g.edge_count());
  const auto members = core.members();
  for (std::size_t i = 0; i < members.size(); ++i) x[members[i]] = local[i];
  if (vertex_sums(g, x) != RationalVector(a.begin(), a.end()))
    throw InternalError("flow solution fails substitution");
  return x;
}

}  // namespace fpbm
