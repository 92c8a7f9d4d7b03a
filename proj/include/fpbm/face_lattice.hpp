#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpbm/edge_set.hpp"
#include "fpbm/error.hpp"
#include "fpbm/multigraph.hpp"
#include "fpbm/polytope.hpp"

namespace fpbm {

/// Every operation here requires b != 0 and throws PreconditionError otherwise.

struct FaceDescriptor {
  EdgeSet graph;
  long dimension = -1;
  std::vector<std::size_t> vertex_ids;  ///< indices into enumerate_vertices(g, b)
};

struct FaceLattice {
  std::vector<VertexPoint> vertices;
  std::vector<FaceDescriptor> faces;  ///< sorted by graph in EdgeSet order
  std::vector<std::pair<std::size_t, std::size_t>> covers;  ///< (i, j): face i covered by face j
  std::size_t bottom = 0;
  std::size_t top = 0;
};

/// Balance condition on H alone; the vertex-cover form is used when H is bipartite.
bool is_face_graph(const MultiGraph& g, const BVector& b, const EdgeSet& h,
                   const Limits& limits = Limits::enumeration());

/// All unions of vertex supports, the empty union included, sorted.
std::vector<EdgeSet> enumerate_face_graphs(const MultiGraph& g, const BVector& b,
                                           const Limits& limits = Limits::enumeration());

/// Throws PreconditionError if H is not a face graph.
FaceDescriptor face_from_graph(const MultiGraph& g, const BVector& b, const EdgeSet& h,
                               const Limits& limits = Limits::enumeration());

/// Union of the vertex supports inside every member; gr(P) for no members.
EdgeSet lattice_meet(const MultiGraph& g, const BVector& b, std::span<const EdgeSet> hs,
                     const Limits& limits = Limits::enumeration());

/// Edgewise union; the empty graph for no members.
EdgeSet lattice_join(const MultiGraph& g, std::span<const EdgeSet> hs);

FaceLattice build_face_lattice(const MultiGraph& g, const BVector& b,
                               const Limits& limits = Limits::enumeration());

/// Hasse diagram, bottom to top, nodes labelled with dimension and edge ids.
std::string to_dot(const MultiGraph& g, const FaceLattice& lattice);

}  // namespace fpbm
