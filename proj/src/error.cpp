#include "fpbm/error.hpp"

namespace fpbm {

void check_vertex_cap(std::size_t vertices, const Limits& limits) {
  if (vertices > limits.max_vertices)
    throw CapExceeded("max-vertices", limits.max_vertices, vertices);
}

void check_edge_cap(std::size_t edges, const Limits& limits) {
  if (edges > limits.max_edges) throw CapExceeded("max-edges", limits.max_edges, edges);
}

}  // namespace fpbm
