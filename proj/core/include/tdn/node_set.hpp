#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tdn/types.hpp"

namespace tdn {

// Small sorted set of node ids. Solutions and candidate sets hold at most k
// nodes, so a sorted vector beats a hash set here and gives deterministic
// iteration order for free.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> ids) {
    for (NodeId id : ids) insert(id);
  }

  // Adopts a vector that is already sorted and duplicate-free.
  static NodeSet from_sorted_unique(std::vector<NodeId> ids) {
    NodeSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  bool insert(NodeId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) return false;
    ids_.insert(it, id);
    return true;
  }

  bool contains(NodeId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  void clear() { ids_.clear(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  const std::vector<NodeId>& ids() const { return ids_; }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

// A seed set together with its influence spread.
struct Solution {
  NodeSet nodes;
  std::int64_t value = 0;
};

}  // namespace tdn
