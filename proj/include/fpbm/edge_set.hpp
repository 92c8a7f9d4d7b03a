#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fpbm {

/// Subset of the edges of a host graph, by canonical edge index. The edge set
/// of a spanning subgraph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t host_edges) : bits_(host_edges) {}
  EdgeSet(std::size_t host_edges, std::initializer_list<std::size_t> members);

  static EdgeSet full(std::size_t host_edges);
  static EdgeSet from_members(std::size_t host_edges, const std::vector<std::size_t>& members);

  std::size_t host_size() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(std::size_t edge) const { return bits_.test(edge); }

  void insert(std::size_t edge) { bits_.set(edge); }
  void erase(std::size_t edge) { bits_.reset(edge); }

  /// Members in ascending canonical order.
  std::vector<std::size_t> members() const;

  bool is_subset_of(const EdgeSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool same_host(const EdgeSet& other) const { return host_size() == other.host_size(); }

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.bits_ == b.bits_; }
  /// Canonical order: fewer edges first, then lexicographic on ascending members.
  friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b);

 private:
  boost::dynamic_bitset<> bits_;
};

}  // namespace fpbm
