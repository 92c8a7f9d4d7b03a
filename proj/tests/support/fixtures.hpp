#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fpbm/multigraph.hpp"

namespace fpbm::testing {

/// Graph with vertices v1..vn and edges listed as (id, u, w) by vertex number.
MultiGraph make_graph(std::size_t n, const std::vector<std::tuple<std::string, int, int>>& edges);
/// Edges named e1..em in order.
MultiGraph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

MultiGraph loop1();
MultiGraph p3();
MultiGraph k3();
MultiGraph c4();
MultiGraph twin();
MultiGraph twin2();
MultiGraph pan();
MultiGraph k3d();
MultiGraph bowtie();

BVector b_of(const MultiGraph& g, const std::vector<std::string>& values);
BVector ones(const MultiGraph& g);
RationalVector q(const std::vector<std::string>& values);

/// Every labelled multigraph on 1..max_vertices vertices with at most max_edges
/// edges (loops and parallel edges included): one graph per multiset of vertex
/// pairs, vertex count fixed.
std::vector<MultiGraph> small_family(std::size_t max_vertices, std::size_t max_edges);

/// All of {0, 1/2, 1, 2}^n in lexicographic order.
std::vector<RationalVector> all_b_vectors(std::size_t n);

}  // namespace fpbm::testing
