#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <vector>

#include "tdn/types.hpp"

namespace tdn {

// Addition-only directed multigraph. Each sieve instance inside a reduction
// owns one of these as its private view of the stream: edges accumulate and
// never expire, so the instance sees exactly the interactions it was fed.
// Copyable; cloning an instance clones its view.
class AdnView {
 public:
  // Appends a batch. Unlike TdnGraph there is no clock: backlog replays feed
  // edges whose arrival timestamps lie in the past.
  void add_batch(std::span<const Interaction> batch);
  void add_batch(std::initializer_list<Interaction> batch) {
    add_batch(std::span<const Interaction>(batch.begin(), batch.size()));
  }

  std::span<const Interaction> edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  bool contains_node(NodeId id) const { return dense_.contains(id); }

  std::int32_t dense_count() const {
    return static_cast<std::int32_t>(ids_.size());
  }

  std::int32_t dense_of(NodeId id) const {
    auto it = dense_.find(id);
    return it == dense_.end() ? -1 : it->second;
  }

  NodeId node_of(std::int32_t dense) const {
    return ids_[static_cast<std::size_t>(dense)];
  }

  // Views never lose edges, so every interned node stays alive.
  bool node_alive(std::int32_t) const { return true; }
  std::size_t num_alive_nodes() const { return ids_.size(); }
  std::vector<NodeId> alive_node_ids() const;

  template <typename Fn>
  void for_each_out(std::int32_t dense, Fn&& fn) const {
    for (const AdjEntry& e : out_[static_cast<std::size_t>(dense)]) fn(e.nbr);
  }

  template <typename Fn>
  void for_each_in(std::int32_t dense, Fn&& fn) const {
    for (const AdjEntry& e : in_[static_cast<std::size_t>(dense)]) fn(e.nbr);
  }

  template <typename Fn>
  void for_each_out_pre_batch(std::int32_t dense, Fn&& fn) const {
    for (const AdjEntry& e : out_[static_cast<std::size_t>(dense)]) {
      if (e.pos < batch_start_) fn(e.nbr);
    }
  }

  std::span<const NodeId> last_batch_new_nodes() const {
    return last_batch_new_nodes_;
  }

 private:
  struct AdjEntry {
    std::int32_t nbr;
    std::uint32_t pos;  // index into edges_
  };

  std::int32_t intern(NodeId id);

  std::unordered_map<NodeId, std::int32_t> dense_;
  std::vector<NodeId> ids_;
  std::vector<std::vector<AdjEntry>> out_;
  std::vector<std::vector<AdjEntry>> in_;
  std::vector<Interaction> edges_;
  std::vector<NodeId> last_batch_new_nodes_;
  std::uint32_t batch_start_ = 0;
};

}  // namespace tdn
