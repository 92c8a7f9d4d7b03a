#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fpbm/edge_set.hpp"
#include "fpbm/multigraph.hpp"

namespace fpbm {

/// Brute-force ground truth built only on exact linear algebra. Deliberately
/// exponential; meant for tests and audits.

/// Basic feasible solutions: column subsets of full column rank whose unique
/// solution is positive. Sorted by support in EdgeSet order.
std::vector<EdgeVector> oracle_vertices(const MultiGraph& g, const BVector& b,
                                        std::size_t max_edges = 20);

/// No nonzero kernel direction of I_G restricted to supp(u).
/// Throws PreconditionError unless u lies in P(G,b).
bool oracle_is_vertex(const MultiGraph& g, const BVector& b, std::span<const Rational> u);

/// Affine rank of the points; -1 for none.
long oracle_dimension(std::span<const EdgeVector> points);

struct OracleFace {
  EdgeSet support;
  std::vector<std::size_t> vertices;  ///< ascending indices into OracleReport::vertices
  long dimension = -1;
};

struct OracleReport {
  std::vector<EdgeVector> vertices;
  long dimension = -1;
  std::vector<OracleFace> faces;  ///< sorted by support in EdgeSet order
  std::vector<std::vector<bool>> adjacency;
};

/// Faces as support-closed vertex subsets. Throws PreconditionError for b = 0.
OracleReport oracle_face_lattice(const MultiGraph& g, const BVector& b, std::size_t max_edges = 20);

}  // namespace fpbm
