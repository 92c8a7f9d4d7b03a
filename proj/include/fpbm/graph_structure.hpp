#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fpbm/matrix.hpp"
#include "fpbm/multigraph.hpp"

namespace fpbm {

struct Component {
  std::vector<std::size_t> vertices;  ///< ascending
  std::vector<std::size_t> edges;     ///< ascending
  bool bipartite = true;
  /// Bipartition classes when bipartite; part_u holds the lowest vertex.
  std::vector<std::size_t> part_u;
  std::vector<std::size_t> part_w;
  /// |E_C| - |V_C|
  std::ptrdiff_t excess = -1;
};

/// Connected components in order of their lowest vertex, with the breadth-first
/// forest used to label them.
struct ComponentReport {
  std::vector<Component> components;
  std::vector<std::size_t> component_of;  ///< vertex -> component index
  std::vector<std::size_t> depth;         ///< breadth-first depth from the component root
  std::vector<std::optional<std::size_t>> parent_edge;  ///< forest edge to the parent
  std::size_t bipartite_count = 0;        ///< B
};

ComponentReport analyze_components(const MultiGraph& g);

/// Rows V, columns E; a loop column holds a single 1.
RatMatrix incidence_matrix(const MultiGraph& g);

/// |E| - |V| + B.
std::size_t incidence_nullity(const MultiGraph& g);

enum class CycleClass {
  Acyclic,
  OddUnicyclic,
  EvenUnicyclic,
  TwoCyclesOneOdd,
  OneEvenTwoOddSharing,
  Higher,
};

std::string_view to_string(CycleClass c);

/// Nullity of a component with this class is zero.
constexpr bool has_zero_nullity(CycleClass c) {
  return c == CycleClass::Acyclic || c == CycleClass::OddUnicyclic;
}
/// Nullity of a component with this class is one.
constexpr bool has_unit_nullity(CycleClass c) {
  return c == CycleClass::EvenUnicyclic || c == CycleClass::TwoCyclesOneOdd ||
         c == CycleClass::OneEvenTwoOddSharing;
}

/// One tag per component of analyze_components(g), same order.
std::vector<CycleClass> classify_cycle_structure(const MultiGraph& g);
std::vector<CycleClass> classify_cycle_structure(const MultiGraph& g, const ComponentReport& report);

/// Every component of g is acyclic or odd-unicyclic.
bool is_pseudoforest_of_odd_cycles(const MultiGraph& g);

/// All simple cycles (loops, parallel pairs included) inside one component, as edge
/// sets. Exhaustive over edge subsets; throws CapExceeded above `max_edges` edges.
std::vector<EdgeSet> enumerate_simple_cycles(const MultiGraph& g, const Component& c,
                                             std::size_t max_edges = 12);

/// Confirms `tag` against the enumerated cycle content of `c`.
bool cycle_content_matches(const MultiGraph& g, const Component& c, CycleClass tag);

/// Spanning subgraph H: per component, the breadth-first tree, plus for a
/// nonbipartite component its first odd-closing non-tree edge.
EdgeSet canonical_core(const MultiGraph& g);
EdgeSet canonical_core(const MultiGraph& g, const ComponentReport& report);

/// Solves I_G x = a by pendant-edge elimination followed by odd-cycle solves.
/// Empty unless every component is acyclic or odd-unicyclic and a is balanced.
std::optional<EdgeVector> solve_by_peeling(const MultiGraph& g, std::span<const Rational> a);

/// Basis of ker I_G: one integral vector x(f) per edge f outside canonical_core,
/// supported on the core plus f, with x(f)_f > 0.
std::vector<EdgeVector> kernel_basis(const MultiGraph& g);

}  // namespace fpbm
