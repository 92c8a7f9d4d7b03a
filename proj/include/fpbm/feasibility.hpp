#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "fpbm/error.hpp"
#include "fpbm/multigraph.hpp"

namespace fpbm {

/// Ordered partition of V into (V1, V2, V3), each ascending.
struct TriPartition {
  std::vector<std::size_t> v1;
  std::vector<std::size_t> v2;
  std::vector<std::size_t> v3;

  friend bool operator==(const TriPartition&, const TriPartition&) = default;
};

struct Feasible {
  EdgeVector point;
};

/// G[V2 ∪ V3, V3] = ∅ and b(V1) < b(V3).
struct InfeasiblePartition {
  TriPartition partition;
  Rational sum_v1;
  Rational sum_v3;
};

using NonemptinessCertificate = std::variant<Feasible, InfeasiblePartition>;

enum class BlockingKind {
  StrictFail,    ///< b(V1) < b(V3)
  EqualityFail,  ///< b(V1) = b(V3) while G[V1, V1 ∪ V2] ≠ ∅
  SlackFail,     ///< b(V1) > b(V3) while G[V1, V1 ∪ V2] = ∅
};

std::string_view to_string(BlockingKind k);

struct Positive {
  EdgeVector point;
};

struct Blocking {
  TriPartition partition;
  BlockingKind kind = BlockingKind::StrictFail;
  Rational sum_v1;
  Rational sum_v3;
};

using PositivityCertificate = std::variant<Positive, Blocking>;

struct ReducedGraph {
  MultiGraph graph;
  std::vector<std::size_t> edge_map;  ///< old edge index -> new edge index
};

/// One edge per adjacent pair (one loop per looped vertex); the first edge of
/// each class keeps its id.
ReducedGraph reduce_multi_edges(const MultiGraph& g);

/// Bipartite double graph: vertex (v,k) has index v + k*|V| for k = 0, 1, edge
/// (e,k) has index e + k*|E|.
struct DoubleGraph {
  MultiGraph graph;
  BVector b;
  std::size_t base_vertices = 0;
  std::size_t base_edges = 0;

  /// x_e = (x'_(e,1) + x'_(e,2)) / mu_e
  EdgeVector project(std::span<const Rational> doubled) const;
  /// x'_(e,1) = x'_(e,2) = mu_e x_e / 2
  EdgeVector lift(std::span<const Rational> base) const;
  /// mu_e: 2 for an ordinary edge, 1 for a loop of the base graph
  std::vector<unsigned> multiplicity;
};

DoubleGraph bipartite_double(const MultiGraph& g, const BVector& b);

/// Augmenting-path point finder on the double graph.
using PointOrPartition = std::variant<EdgeVector, InfeasiblePartition>;
PointOrPartition find_point(const MultiGraph& g, const BVector& b);

/// First violating tri-partition of the nonemptiness condition, enumerating
/// nonempty independent V3 in ascending mask order with V1 = N(V3).
std::optional<InfeasiblePartition> nonempty_violation(const MultiGraph& g, const BVector& b);

/// Bipartite g only: first vertex cover C (ascending mask) with b(C) < b(V \ C).
std::optional<std::vector<std::size_t>> violating_cover(const MultiGraph& g, const BVector& b);

/// A cover C with b(C) < b(V\C), or where equality fails to match V\C being a cover.
struct CoverViolation {
  std::vector<std::size_t> cover;
  Rational sum_cover;
  Rational sum_rest;
  bool complement_is_cover = false;
};

/// Bipartite g only: first vertex cover violating the positivity condition.
std::optional<CoverViolation> positivity_cover_violation(const MultiGraph& g, const BVector& b);

/// First tri-partition (V3 possibly empty) violating the positivity condition.
std::optional<Blocking> positivity_violation(const MultiGraph& g, const BVector& b);

NonemptinessCertificate check_nonempty(const MultiGraph& g, const BVector& b,
                                       const Limits& limits = Limits::feasibility());

/// Throws PreconditionError when g has no edges.
PositivityCertificate check_strictly_positive(const MultiGraph& g, const BVector& b,
                                              const Limits& limits = Limits::enumeration());

/// Independent validation of certificates, for tests and callers that receive them.
bool certificate_holds(const MultiGraph& g, const BVector& b, const InfeasiblePartition& c);
bool certificate_holds(const MultiGraph& g, const BVector& b, const Blocking& c);

}  // namespace fpbm
