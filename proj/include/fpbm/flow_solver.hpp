#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fpbm/multigraph.hpp"

namespace fpbm {

/// A bipartite component whose two classes carry different demand totals.
struct BalanceViolation {
  std::size_t component = 0;  ///< index into analyze_components(g).components
  std::vector<std::size_t> part_u;
  std::vector<std::size_t> part_w;
  Rational sum_u;
  Rational sum_w;
};

/// Empty when every bipartite component is balanced; otherwise the first
/// violating component.
std::optional<BalanceViolation> flow_balance_check(const MultiGraph& g,
                                                   std::span<const Rational> a);

/// Some x with I_G x = a, zero outside canonical_core(g).
using FlowResult = std::variant<EdgeVector, BalanceViolation>;
FlowResult solve_flow(const MultiGraph& g, std::span<const Rational> a);

/// The unique solution of I_G x = a by the closed-form path sums. Requires a
/// balanced demand and a graph whose components are acyclic or odd-unicyclic;
/// throws PreconditionError otherwise.
EdgeVector unique_solve(const MultiGraph& g, std::span<const Rational> a);

}  // namespace fpbm
