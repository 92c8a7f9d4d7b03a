#include "fpbm/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>

#include "fpbm/graph_structure.hpp"
#include "fpbm/polytope.hpp"

namespace fpbm {

std::string_view to_string(BlockingKind k) {
  switch (k) {
    case BlockingKind::StrictFail: return "StrictFail";
    case BlockingKind::EqualityFail: return "EqualityFail";
    case BlockingKind::SlackFail: return "SlackFail";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskVertices = 30;
constexpr std::size_t kSumTableVertices = 20;

// Vertex-set view of g as bitmasks, with b-sums over masks.
class MaskView {
 public:
  MaskView(const MultiGraph& g, const BVector& b) : n_(g.vertex_count()), b_(b.values()) {
    if (b.size() != n_) throw ValidationError("b does not match the graph");
    if (n_ > kMaskVertices) throw CapExceeded("max-vertices", kMaskVertices, n_);
    all_ = (Mask{1} << n_) - 1;
    nbr_.assign(n_, 0);
    for (const Edge& e : g.edges()) {
      nbr_[e.u] |= Mask{1} << e.w;
      nbr_[e.w] |= Mask{1} << e.u;
    }
    if (n_ <= kSumTableVertices) {
      table_.resize(std::size_t{1} << n_);
      for (std::size_t m = 1; m < table_.size(); ++m)
        table_[m] = table_[m & (m - 1)] + b_[std::countr_zero(m)];
    }
  }

  Mask all() const { return all_; }

  Mask neighbours(Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= nbr_[std::countr_zero(s)];
    return out;
  }

  bool independent(Mask s) const { return (neighbours(s) & s) == 0; }

  Rational sum(Mask s) const {
    if (!table_.empty()) return table_[s];
    Rational total;
    for (; s; s &= s - 1) total += b_[std::countr_zero(s)];
    return total;
  }

  std::vector<std::size_t> members(Mask s) const {
    std::vector<std::size_t> out;
    for (; s; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    return out;
  }

  TriPartition partition(Mask v1, Mask v3) const {
    return {members(v1), members(all_ & ~v1 & ~v3), members(v3)};
  }

 private:
  std::size_t n_;
  std::span<const Rational> b_;
  Mask all_ = 0;
  std::vector<Mask> nbr_;
  std::vector<Rational> table_;
};

void require_bipartite(const ComponentReport& report) {
  if (report.bipartite_count != report.components.size())
    throw PreconditionError("vertex-cover form needs a bipartite graph");
}

// Global bipartition from the per-component classes.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> sides(const ComponentReport& report) {
  std::vector<std::size_t> u, w;
  for (const auto& c : report.components) {
    u.insert(u.end(), c.part_u.begin(), c.part_u.end());
    w.insert(w.end(), c.part_w.begin(), c.part_w.end());
  }
  std::sort(u.begin(), u.end());
  std::sort(w.begin(), w.end());
  return {u, w};
}

// Turns a violating vertex cover of a bipartite graph into a tri-partition certificate.
InfeasiblePartition partition_from_cover(const MultiGraph& g, const BVector& b,
                                         const std::vector<std::size_t>& cover) {
  const auto report = analyze_components(g);
  const auto [u, w] = sides(report);
  const Rational su = sum_over(b, u), sw = sum_over(b, w);
  TriPartition p;
  if (su != sw) {
    p.v1 = su < sw ? u : w;
    p.v3 = su < sw ? w : u;
  } else {
    std::vector<bool> in_cover(g.vertex_count(), false), in_u(g.vertex_count(), false);
    for (std::size_t v : cover) in_cover[v] = true;
    for (std::size_t v : u) in_u[v] = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (in_cover[v] && in_u[v])
        p.v1.push_back(v);
      else if (!in_cover[v] && !in_u[v])
        p.v3.push_back(v);
      else
        p.v2.push_back(v);
    }
  }
  InfeasiblePartition cert{p, sum_over(b, p.v1), sum_over(b, p.v3)};
  if (!certificate_holds(g, b, cert)) throw InternalError("cover conversion produced an invalid partition");
  return cert;
}

bool valid_tripartition(const MultiGraph& g, const TriPartition& p) {
  std::vector<int> seen(g.vertex_count(), 0);
  for (const auto* part : {&p.v1, &p.v2, &p.v3})
    for (std::size_t v : *part) {
      if (v >= g.vertex_count() || seen[v]++) return false;
    }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(g.vertex_count())) return false;
  std::vector<std::size_t> v23 = p.v2;
  v23.insert(v23.end(), p.v3.begin(), p.v3.end());
  return edge_set_between(g, std::span<const std::size_t>(v23), std::span<const std::size_t>(p.v3))
      .empty();
}

bool v1_isolated_from_v1v2(const MultiGraph& g, const TriPartition& p) {
  std::vector<std::size_t> v12 = p.v1;
  v12.insert(v12.end(), p.v2.begin(), p.v2.end());
  return edge_set_between(g, std::span<const std::size_t>(p.v1), std::span<const std::size_t>(v12))
      .empty();
}

}  // namespace

bool certificate_holds(const MultiGraph& g, const BVector& b, const InfeasiblePartition& c) {
  if (!valid_tripartition(g, c.partition)) return false;
  const Rational s1 = sum_over(b, c.partition.v1), s3 = sum_over(b, c.partition.v3);
  return s1 == c.sum_v1 && s3 == c.sum_v3 && s1 < s3;
}

bool certificate_holds(const MultiGraph& g, const BVector& b, const Blocking& c) {
  if (!valid_tripartition(g, c.partition)) return false;
  const Rational s1 = sum_over(b, c.partition.v1), s3 = sum_over(b, c.partition.v3);
  if (s1 != c.sum_v1 || s3 != c.sum_v3) return false;
  const bool no_edges = v1_isolated_from_v1v2(g, c.partition);
  switch (c.kind) {
    case BlockingKind::StrictFail: return s1 < s3;
    case BlockingKind::EqualityFail: return s1 == s3 && !no_edges;
    case BlockingKind::SlackFail: return s1 > s3 && no_edges;
  }
  return false;
}

ReducedGraph reduce_multi_edges(const MultiGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> classes;
  std::vector<EdgeSpec> kept;
  ReducedGraph out{g.spanning_subgraph(EdgeSet(g.edge_count())), {}};
  out.edge_map.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const auto key = std::minmax(e.u, e.w);
    auto [it, inserted] = classes.emplace(key, kept.size());
    if (inserted) kept.push_back({e.id, g.vertex_id(e.u), g.vertex_id(e.w)});
    out.edge_map.push_back(it->second);
  }
  out.graph = MultiGraph(g.vertex_ids(), kept);
  return out;
}

DoubleGraph bipartite_double(const MultiGraph& g, const BVector& b) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  std::vector<VertexId> ids;
  ids.reserve(2 * n);
  for (int k = 1; k <= 2; ++k)
    for (const auto& v : g.vertex_ids()) ids.push_back("(" + v + "," + std::to_string(k) + ")");
  std::vector<EdgeSpec> edges;
  edges.reserve(2 * m);
  for (const Edge& e : g.edges()) edges.push_back({"(" + e.id + ",1)", ids[e.u], ids[n + e.w]});
  for (const Edge& e : g.edges()) edges.push_back({"(" + e.id + ",2)", ids[e.w], ids[n + e.u]});
  RationalVector bb(b.values().begin(), b.values().end());
  bb.insert(bb.end(), b.values().begin(), b.values().end());
  MultiGraph doubled(std::move(ids), edges);
  BVector db(doubled, std::move(bb));
  DoubleGraph out{std::move(doubled), std::move(db), n, m, {}};
  for (const Edge& e : g.edges()) out.multiplicity.push_back(e.is_loop() ? 1 : 2);
  return out;
}

EdgeVector DoubleGraph::project(std::span<const Rational> doubled) const {
  if (doubled.size() != 2 * base_edges) throw ValidationError("double-graph vector size mismatch");
  EdgeVector x(base_edges);
  for (std::size_t e = 0; e < base_edges; ++e)
    x[e] = (doubled[e] + doubled[e + base_edges]) / multiplicity[e];
  return x;
}

EdgeVector DoubleGraph::lift(std::span<const Rational> base) const {
  if (base.size() != base_edges) throw ValidationError("edge vector size mismatch");
  EdgeVector x(2 * base_edges);
  for (std::size_t e = 0; e < base_edges; ++e) {
    x[e] = base[e] * multiplicity[e] / 2;
    x[e + base_edges] = x[e];
  }
  return x;
}

PointOrPartition find_point(const MultiGraph& g, const BVector& b) {
  if (b.size() != g.vertex_count()) throw ValidationError("b does not match the graph");
  const DoubleGraph d = bipartite_double(g, b);
  const MultiGraph& dg = d.graph;
  const std::size_t n = g.vertex_count(), nn = dg.vertex_count();
  const auto is_u = [n](std::size_t v) { return v < n; };
  EdgeVector x(dg.edge_count());
  RationalVector load(nn);
  constexpr auto none = static_cast<std::size_t>(-1);

  while (true) {
    // Deficient vertices: on the first layer they form S, on the second T.
    std::vector<std::size_t> pred(nn, none);
    std::vector<bool> reached(nn, false);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
      if (load[v] < d.b[v]) {
        reached[v] = true;
        queue.push_back(v);
      }
    if (queue.empty()) break;

    std::size_t target = none;
    while (!queue.empty() && target == none) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : dg.incident(v)) {
        const std::size_t w = dg.edge(e).other(v);
        if (reached[w]) continue;
        if (!is_u(v) && sgn(x[e]) <= 0) continue;  // second-to-first steps need x_e > 0
        reached[w] = true;
        pred[w] = e;
        if (!is_u(w) && load[w] < d.b[w]) {
          target = w;
          break;
        }
        queue.push_back(w);
      }
    }

    if (target == none) {
      TriPartition p;
      for (std::size_t v = 0; v < n; ++v) {
        const bool first = reached[v], second = reached[v + n];
        if (!first && second)
          p.v1.push_back(v);
        else if (first && !second)
          p.v3.push_back(v);
        else
          p.v2.push_back(v);
      }
      InfeasiblePartition cert{p, sum_over(b, p.v1), sum_over(b, p.v3)};
      if (!certificate_holds(g, b, cert))
        throw InternalError("augmenting-path cut did not yield a valid partition");
      return cert;
    }

    std::vector<std::size_t> path;
    std::size_t at = target;
    while (pred[at] != none) {
      path.push_back(pred[at]);
      at = dg.edge(pred[at]).other(at);
    }
    const std::size_t source = at;
    Rational eps = d.b[target] - load[target];
    eps = std::min(eps, Rational(d.b[source] - load[source]));
    at = target;
    for (std::size_t e : path) {
      const std::size_t prev = dg.edge(e).other(at);
      if (!is_u(prev)) eps = std::min(eps, x[e]);
      at = prev;
    }
    at = target;
    for (std::size_t e : path) {
      const std::size_t prev = dg.edge(e).other(at);
      if (is_u(prev))
        x[e] += eps;
      else
        x[e] -= eps;
      at = prev;
    }
    load[source] += eps;
    load[target] += eps;
  }

  for (std::size_t v = n; v < nn; ++v)
    if (load[v] != d.b[v]) throw InternalError("augmentation ended with an unmatched second layer");
  EdgeVector point = d.project(x);
  if (!in_polytope(g, b, point)) throw InternalError("projected point is not in the polytope");
  return point;
}

std::optional<InfeasiblePartition> nonempty_violation(const MultiGraph& g, const BVector& b) {
  const MaskView mv(g, b);
  for (Mask v3 = 1; v3 <= mv.all(); ++v3) {
    if (!mv.independent(v3)) continue;
    const Mask v1 = mv.neighbours(v3);
    const Rational s1 = mv.sum(v1), s3 = mv.sum(v3);
    if (s1 < s3) return InfeasiblePartition{mv.partition(v1, v3), s1, s3};
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> violating_cover(const MultiGraph& g, const BVector& b) {
  require_bipartite(analyze_components(g));
  const MaskView mv(g, b);
  for (Mask c = 0; c <= mv.all(); ++c) {
    const Mask rest = mv.all() & ~c;
    if (!mv.independent(rest)) continue;
    if (mv.sum(c) < mv.sum(rest)) return mv.members(c);
  }
  return std::nullopt;
}

std::optional<CoverViolation> positivity_cover_violation(const MultiGraph& g, const BVector& b) {
  require_bipartite(analyze_components(g));
  const MaskView mv(g, b);
  for (Mask c = 0; c <= mv.all(); ++c) {
    const Mask rest = mv.all() & ~c;
    if (!mv.independent(rest)) continue;
    const Rational sc = mv.sum(c), sr = mv.sum(rest);
    const bool complement_cover = mv.independent(c);
    if (sc < sr || (sc == sr) != complement_cover)
      return CoverViolation{mv.members(c), sc, sr, complement_cover};
  }
  return std::nullopt;
}

std::optional<Blocking> positivity_violation(const MultiGraph& g, const BVector& b) {
  const MaskView mv(g, b);
  for (Mask v3 = 0; v3 <= mv.all(); ++v3) {
    if (!mv.independent(v3)) continue;
    const Mask forced = mv.neighbours(v3);
    const Mask free = mv.all() & ~forced & ~v3;
    const Rational s3 = mv.sum(v3);
    Mask sub = 0;
    do {
      const Mask v1 = forced | sub;
      const Rational s1 = mv.sum(v1);
      // G[V1, V1 ∪ V2] is empty iff every neighbour of V1 lies in V3.
      const bool no_edges = (mv.neighbours(v1) & ~v3) == 0;
      std::optional<BlockingKind> kind;
      if (s1 < s3)
        kind = BlockingKind::StrictFail;
      else if (s1 == s3 && !no_edges)
        kind = BlockingKind::EqualityFail;
      else if (s1 > s3 && no_edges)
        kind = BlockingKind::SlackFail;
      if (kind) return Blocking{mv.partition(v1, v3), *kind, s1, s3};
      sub = (sub - free) & free;
    } while (sub != 0);
  }
  return std::nullopt;
}

NonemptinessCertificate check_nonempty(const MultiGraph& g, const BVector& b, const Limits& limits) {
  check_vertex_cap(g.vertex_count(), limits);
  const auto report = analyze_components(g);
  std::optional<InfeasiblePartition> violation;
  if (report.bipartite_count == report.components.size()) {
    if (auto cover = violating_cover(g, b)) violation = partition_from_cover(g, b, *cover);
    FPBM_CROSS_CHECK(violation.has_value() == nonempty_violation(g, b).has_value(),
                     "vertex-cover and tri-partition verdicts");
  } else {
    violation = nonempty_violation(g, b);
  }
  auto found = find_point(g, b);
  if (violation.has_value() != std::holds_alternative<InfeasiblePartition>(found))
    throw InternalError("point finder disagrees with the partition condition");
  if (violation) return *violation;
  return Feasible{std::get<EdgeVector>(std::move(found))};
}

PositivityCertificate check_strictly_positive(const MultiGraph& g, const BVector& b,
                                              const Limits& limits) {
  if (g.edge_count() == 0) throw PreconditionError("strict positivity needs a nonempty edge set");
  check_vertex_cap(g.vertex_count(), limits);
  check_edge_cap(g.edge_count(), limits);
  auto violation = positivity_violation(g, b);
#ifdef FPBM_CROSS_CHECKS
  const auto report = analyze_components(g);
  if (report.bipartite_count == report.components.size())
    FPBM_CROSS_CHECK(violation.has_value() == positivity_cover_violation(g, b).has_value(),
                     "vertex-cover and tri-partition positivity verdicts");
#endif
  if (violation) return *violation;

  const auto vertices = enumerate_vertices(g, b, limits);
  if (vertices.empty()) throw InternalError("positivity condition holds but no vertex found");
  EdgeVector mean(g.edge_count());
  for (const auto& v : vertices)
    for (std::size_t e = 0; e < mean.size(); ++e) mean[e] += v.coords[e];
  for (auto& q : mean) q /= static_cast<unsigned long>(vertices.size());
  if (!in_polytope(g, b, mean) ||
      std::any_of(mean.begin(), mean.end(), [](const Rational& q) { return sgn(q) <= 0; }))
    throw InternalError("vertex mean is not a strictly positive point");
  return Positive{std::move(mean)};
}

}  // namespace fpbm
