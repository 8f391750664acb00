#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <vector>

#include "tdn/types.hpp"

namespace tdn {

// Edges and nodes dropped by one clock advance.
struct ExpiryReport {
  std::vector<Interaction> expired_edges;
  std::vector<NodeId> removed_nodes;  // ascending
};

// Directed multigraph whose edges carry lifetimes. Maintains exactly the
// alive edge set: an edge inserted at time tau with lifetime l is present for
// timesteps tau .. tau+l-1 and is removed by the advance that moves the clock
// to tau+l. Nodes exist while they have at least one alive incident edge.
//
// Node ids are mapped to dense indices internally so traversals run over flat
// arrays; dense slots are never recycled, only alive-ness toggles. Expiry is
// O(1) amortized via a bucket-per-timestep calendar keyed by expiry time.
// Edges with infinite lifetime never enter the calendar.
class TdnGraph {
 public:
  explicit TdnGraph(Timestep start = 1) : now_(start) {}

  Timestep now() const { return now_; }

  // Inserts one batch of interactions arriving at the current timestep.
  // Throws std::invalid_argument on self-loops, non-positive lifetimes, or
  // an arrival that differs from now() (streams must be chronological); a
  // rejected batch leaves the graph unchanged.
  void insert_batch(std::span<const Interaction> batch);
  void insert_batch(std::initializer_list<Interaction> batch) {
    insert_batch(std::span<const Interaction>(batch.begin(), batch.size()));
  }

  // Moves the clock one step forward and drops every edge whose lifetime is
  // exhausted, plus every node left without alive incident edges.
  ExpiryReport advance_time();

  // Alive edges whose remaining lifetime at the current timestep lies in
  // [low, high), ordered by arrival timestep with ties in input order.
  // Pass high = kInfiniteLifetime for an unbounded upper end; that range
  // includes never-expiring edges.
  std::vector<Interaction> edges_with_remaining_lifetime_in(Lifetime low,
                                                            Lifetime high) const;

  std::size_t num_alive_edges() const { return alive_edges_; }
  std::size_t num_alive_nodes() const { return alive_nodes_; }

  std::vector<Interaction> alive_edges() const;  // input order
  std::vector<NodeId> alive_node_ids() const;    // ascending

  bool contains_node(NodeId id) const {
    std::int32_t d = dense_of(id);
    return d >= 0 && degree_[static_cast<std::size_t>(d)] > 0;
  }

  // --- flat view used by traversals ---------------------------------------

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

  bool node_alive(std::int32_t dense) const {
    return degree_[static_cast<std::size_t>(dense)] > 0;
  }

  template <typename Fn>
  void for_each_out(std::int32_t dense, Fn&& fn) const {
    for (const AdjEntry& e : out_[static_cast<std::size_t>(dense)]) fn(e.nbr);
  }

  template <typename Fn>
  void for_each_in(std::int32_t dense, Fn&& fn) const {
    for (const AdjEntry& e : in_[static_cast<std::size_t>(dense)]) fn(e.nbr);
  }

  // Out-neighbors through edges that precede the most recent batch. Lets the
  // affected-set computation compare reachability with and without the batch
  // after the batch has already been inserted.
  template <typename Fn>
  void for_each_out_pre_batch(std::int32_t dense, Fn&& fn) const {
    for (const AdjEntry& e : out_[static_cast<std::size_t>(dense)]) {
      if (slots_[e.slot].seq < batch_start_seq_) fn(e.nbr);
    }
  }

  // Endpoints that went from zero alive incident edges to at least one during
  // the most recent insert_batch, ascending.
  std::span<const NodeId> last_batch_new_nodes() const {
    return last_batch_new_nodes_;
  }

 private:
  struct AdjEntry {
    std::int32_t nbr;
    std::uint32_t slot;
  };

  struct EdgeRecord {
    Interaction edge;
    std::uint64_t seq = 0;
    std::uint32_t pos_out = 0;
    std::uint32_t pos_in = 0;
    bool alive = false;
  };

  std::int32_t intern(NodeId id);
  void bump_degree(std::int32_t dense);
  void drop_degree(std::int32_t dense, std::vector<NodeId>& removed);
  void detach(std::uint32_t slot);

  Timestep now_;
  std::unordered_map<NodeId, std::int32_t> dense_;
  std::vector<NodeId> ids_;
  std::vector<std::uint32_t> degree_;  // alive incident edge count per dense id
  std::vector<std::vector<AdjEntry>> out_;
  std::vector<std::vector<AdjEntry>> in_;
  std::vector<EdgeRecord> slots_;
  std::vector<std::uint32_t> free_slots_;
  std::unordered_map<Timestep, std::vector<std::uint32_t>> calendar_;
  std::vector<NodeId> last_batch_new_nodes_;
  std::size_t alive_edges_ = 0;
  std::size_t alive_nodes_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t batch_start_seq_ = 0;
};

}  // namespace tdn
