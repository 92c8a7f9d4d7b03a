#include "support/fixtures.hpp"

#include <functional>
#include <tuple>

namespace fpbm::testing {

namespace {

std::vector<VertexId> vertex_names(std::size_t n) {
  std::vector<VertexId> ids;
  for (std::size_t i = 1; i <= n; ++i) ids.push_back("v" + std::to_string(i));
  return ids;
}

}  // namespace

MultiGraph make_graph(std::size_t n, const std::vector<std::tuple<std::string, int, int>>& edges) {
  std::vector<EdgeSpec> specs;
  for (const auto& [id, u, w] : edges)
    specs.push_back({id, "v" + std::to_string(u), "v" + std::to_string(w)});
  return MultiGraph(vertex_names(n), specs);
}

MultiGraph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::tuple<std::string, int, int>> named;
  for (std::size_t i = 0; i < edges.size(); ++i)
    named.emplace_back("e" + std::to_string(i + 1), edges[i].first, edges[i].second);
  return make_graph(n, named);
}

MultiGraph loop1() { return make_graph(1, {{1, 1}}); }
MultiGraph p3() { return make_graph(3, {{1, 2}, {2, 3}}); }
MultiGraph k3() { return make_graph(3, {{1, 2}, {1, 3}, {2, 3}}); }
MultiGraph c4() { return make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
MultiGraph twin() { return make_graph(2, {{1, 2}, {1, 2}}); }
MultiGraph twin2() { return make_graph(4, {{1, 2}, {1, 2}, {3, 4}, {3, 4}}); }
MultiGraph pan() { return make_graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}); }
MultiGraph k3d() {
  return make_graph(3, std::vector<std::tuple<std::string, int, int>>{
                           {"e1", 1, 2}, {"e1'", 1, 2}, {"e2", 1, 3}, {"e3", 2, 3}});
}
MultiGraph bowtie() { return make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

RationalVector q(const std::vector<std::string>& values) {
  RationalVector out;
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

BVector b_of(const MultiGraph& g, const std::vector<std::string>& values) { return BVector(g, q(values)); }

BVector ones(const MultiGraph& g) { return BVector(g, RationalVector(g.vertex_count(), 1)); }

std::vector<MultiGraph> small_family(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<MultiGraph> family;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) slots.emplace_back(static_cast<int>(i), static_cast<int>(j));
    std::vector<std::pair<int, int>> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      family.push_back(make_graph(n, chosen));
      if (chosen.size() == max_edges) return;
      for (std::size_t s = from; s < slots.size(); ++s) {
        chosen.push_back(slots[s]);
        extend(s);
        chosen.pop_back();
      }
    };
    extend(0);
  }
  return family;
}

std::vector<RationalVector> all_b_vectors(std::size_t n) {
  const RationalVector levels = q({"0", "1/2", "1", "2"});
  std::vector<RationalVector> out;
  RationalVector current(n);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == n) {
      out.push_back(current);
      return;
    }
    for (const auto& l : levels) {
      current[i] = l;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

}  // namespace fpbm::testing
