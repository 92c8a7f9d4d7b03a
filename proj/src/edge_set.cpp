#include "fpbm/edge_set.hpp"

#include <algorithm>

#include "fpbm/error.hpp"

namespace fpbm {

EdgeSet::EdgeSet(std::size_t host_edges, std::initializer_list<std::size_t> members)
    : bits_(host_edges) {
  for (std::size_t e : members) bits_.set(e);
}

EdgeSet EdgeSet::full(std::size_t host_edges) {
  EdgeSet s(host_edges);
  s.bits_.set();
  return s;
}

EdgeSet EdgeSet::from_members(std::size_t host_edges, const std::vector<std::size_t>& members) {
  EdgeSet s(host_edges);
  for (std::size_t e : members) s.bits_.set(e);
  return s;
}

std::vector<std::size_t> EdgeSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
    out.push_back(i);
  return out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  if (!same_host(other)) throw PreconditionError("edge sets of different host graphs");
  bits_ |= other.bits_;
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  if (!same_host(other)) throw PreconditionError("edge sets of different host graphs");
  bits_ &= other.bits_;
  return *this;
}

std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  if (auto c = std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
      c != 0)
    return c;
  return a.host_size() <=> b.host_size();
}

}  // namespace fpbm
