#include "tdn/adn_view.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdn {

std::int32_t AdnView::intern(NodeId id) {
  auto [it, inserted] = dense_.try_emplace(id, dense_count());
  if (inserted) {
    ids_.push_back(id);
    out_.emplace_back();
    in_.emplace_back();
    last_batch_new_nodes_.push_back(id);
  }
  return it->second;
}

std::vector<NodeId> AdnView::alive_node_ids() const {
  std::vector<NodeId> ids = ids_;
  std::sort(ids.begin(), ids.end());
  return ids;
}

void AdnView::add_batch(std::span<const Interaction> batch) {
  batch_start_ = static_cast<std::uint32_t>(edges_.size());
  last_batch_new_nodes_.clear();
  for (const Interaction& e : batch) {
    if (e.source == e.target) {
      throw std::invalid_argument("add_batch: self-loop at node " +
                                  std::to_string(e.source));
    }
    std::int32_t du = intern(e.source);
    std::int32_t dv = intern(e.target);
    auto pos = static_cast<std::uint32_t>(edges_.size());
    edges_.push_back(e);
    out_[static_cast<std::size_t>(du)].push_back({dv, pos});
    in_[static_cast<std::size_t>(dv)].push_back({du, pos});
  }
  std::sort(last_batch_new_nodes_.begin(), last_batch_new_nodes_.end());
}

}  // namespace tdn
