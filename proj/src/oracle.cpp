#include "fpbm/oracle.hpp"

#include <algorithm>
#include <map>
#include <variant>

#include "fpbm/error.hpp"
#include "fpbm/matrix.hpp"

namespace fpbm {

namespace {

RatMatrix incidence(const MultiGraph& g) {
  RatMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    m(g.edge(e).u, e) = 1;
    m(g.edge(e).w, e) = 1;
  }
  return m;
}

// Incrementally reduced column basis for testing linear independence.
struct ColumnBasis {
  std::vector<RationalVector> rows;  ///< reduced vectors
  std::vector<std::size_t> pivots;

  bool try_add(RationalVector v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (sgn(v[pivots[i]]) == 0) continue;
      const Rational f = v[pivots[i]] / rows[i][pivots[i]];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * rows[i][k];
    }
    const auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (it == v.end()) return false;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    rows.push_back(std::move(v));
    return true;
  }
};

struct BasisSearch {
  const RatMatrix& inc;
  std::span<const Rational> b;
  std::vector<std::size_t> chosen;
  std::vector<EdgeVector> found;

  void visit() {
    const RatMatrix sub = inc.select_columns(chosen);
    const auto result = solve_affine(sub, b);
    const auto* sol = std::get_if<AffineSolution>(&result);
    if (!sol) return;
    if (!sol->kernel_basis.empty()) throw InternalError("independent columns with a kernel");
    if (std::any_of(sol->particular.begin(), sol->particular.end(),
                    [](const Rational& q) { return sgn(q) <= 0; }))
      return;
    EdgeVector x(inc.cols());
    for (std::size_t i = 0; i < chosen.size(); ++i) x[chosen[i]] = sol->particular[i];
    found.push_back(std::move(x));
  }

  void run(std::size_t pos, const ColumnBasis& basis) {
    visit();
    for (std::size_t e = pos; e < inc.cols(); ++e) {
      ColumnBasis next = basis;
      RationalVector col(inc.rows());
      for (std::size_t r = 0; r < inc.rows(); ++r) col[r] = inc(r, e);
      if (!next.try_add(std::move(col))) continue;
      chosen.push_back(e);
      run(e + 1, next);
      chosen.pop_back();
    }
  }
};

EdgeSet support_of(std::span<const Rational> x) {
  EdgeSet s(x.size());
  for (std::size_t e = 0; e < x.size(); ++e)
    if (sgn(x[e]) != 0) s.insert(e);
  return s;
}

bool member(const MultiGraph& g, const BVector& b, std::span<const Rational> x) {
  if (x.size() != g.edge_count()) return false;
  if (std::any_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) < 0; })) return false;
  const auto sums = incidence(g).multiply(x);
  return std::equal(sums.begin(), sums.end(), b.values().begin(), b.values().end());
}

}  // namespace

std::vector<EdgeVector> oracle_vertices(const MultiGraph& g, const BVector& b, std::size_t max_edges) {
  if (g.edge_count() > max_edges) throw CapExceeded("max-edges", max_edges, g.edge_count());
  if (b.size() != g.vertex_count()) throw ValidationError("b does not match the graph");
  const RatMatrix inc = incidence(g);
  BasisSearch search{inc, b.values(), {}, {}};
  search.run(0, ColumnBasis{});
  auto& found = search.found;
  std::sort(found.begin(), found.end(), [](const EdgeVector& x, const EdgeVector& y) {
    return support_of(x) < support_of(y);
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return std::move(found);
}

bool oracle_is_vertex(const MultiGraph& g, const BVector& b, std::span<const Rational> u) {
  if (!member(g, b, u)) throw PreconditionError("point is not in the polytope");
  const auto cols = support_of(u).members();
  return rank_nullity(incidence(g).select_columns(cols)).nullity == 0;
}

long oracle_dimension(std::span<const EdgeVector> points) {
  if (points.empty()) return -1;
  const std::size_t dim = points.front().size();
  RatMatrix diffs(dim, points.size() - 1);
  for (std::size_t j = 1; j < points.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) diffs(i, j - 1) = points[j][i] - points[0][i];
  return static_cast<long>(rank_nullity(diffs).rank);
}

OracleReport oracle_face_lattice(const MultiGraph& g, const BVector& b, std::size_t max_edges) {
  if (b.is_zero()) throw PreconditionError("face lattice needs a nonzero b");
  OracleReport report;
  report.vertices = oracle_vertices(g, b, max_edges);
  report.dimension = oracle_dimension(report.vertices);
  const std::size_t k = report.vertices.size();
  std::vector<EdgeSet> supports;
  for (const auto& v : report.vertices) supports.push_back(support_of(v));

  const auto closure = [&](const std::vector<std::size_t>& set) {
    EdgeSet joint(g.edge_count());
    for (std::size_t i : set) joint |= supports[i];
    std::vector<std::size_t> closed;
    for (std::size_t i = 0; i < k; ++i)
      if (supports[i].is_subset_of(joint)) closed.push_back(i);
    return std::pair{closed, joint};
  };

  std::map<std::vector<std::size_t>, EdgeSet> faces;
  std::vector<std::vector<std::size_t>> frontier;
  auto [bottom, bottom_support] = closure({});
  faces.emplace(bottom, bottom_support);
  frontier.push_back(bottom);
  while (!frontier.empty()) {
    const auto set = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < k; ++i) {
      if (std::binary_search(set.begin(), set.end(), i)) continue;
      auto bigger = set;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), i), i);
      auto [closed, joint] = closure(bigger);
      if (faces.emplace(closed, joint).second) frontier.push_back(closed);
    }
  }
  for (const auto& [set, joint] : faces) {
    std::vector<EdgeVector> pts;
    for (std::size_t i : set) pts.push_back(report.vertices[i]);
    report.faces.push_back({joint, set, oracle_dimension(pts)});
  }
  std::sort(report.faces.begin(), report.faces.end(),
            [](const OracleFace& x, const OracleFace& y) { return x.support < y.support; });

  report.adjacency.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool adjacent = closure({i, j}).first.size() == 2;
      report.adjacency[i][j] = report.adjacency[j][i] = adjacent;
    }
  return report;
}

}  // namespace fpbm
