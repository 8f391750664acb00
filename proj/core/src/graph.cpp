#include "tdn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdn {

std::int32_t TdnGraph::intern(NodeId id) {
  auto [it, inserted] = dense_.try_emplace(id, dense_count());
  if (inserted) {
    ids_.push_back(id);
    degree_.push_back(0);
    out_.emplace_back();
    in_.emplace_back();
  }
  return it->second;
}

void TdnGraph::bump_degree(std::int32_t dense) {
  if (degree_[static_cast<std::size_t>(dense)]++ == 0) {
    ++alive_nodes_;
    last_batch_new_nodes_.push_back(node_of(dense));
  }
}

void TdnGraph::drop_degree(std::int32_t dense, std::vector<NodeId>& removed) {
  if (--degree_[static_cast<std::size_t>(dense)] == 0) {
    --alive_nodes_;
    removed.push_back(node_of(dense));
  }
}

void TdnGraph::insert_batch(std::span<const Interaction> batch) {
  // Validate the whole batch before touching anything so a rejected batch
  // leaves the graph unchanged.
  for (const Interaction& e : batch) {
    if (e.arrival != now_) {
      throw std::invalid_argument(
          "insert_batch: interaction arrival " + std::to_string(e.arrival) +
          " does not match current timestep " + std::to_string(now_));
    }
    if (e.source == e.target) {
      throw std::invalid_argument("insert_batch: self-loop at node " +
                                  std::to_string(e.source));
    }
    if (e.lifetime < 1) {
      throw std::invalid_argument("insert_batch: lifetime must be >= 1");
    }
  }

  batch_start_seq_ = next_seq_;
  last_batch_new_nodes_.clear();
  for (const Interaction& e : batch) {
    std::int32_t du = intern(e.source);
    std::int32_t dv = intern(e.target);

    std::uint32_t slot;
    if (free_slots_.empty()) {
      slot = static_cast<std::uint32_t>(slots_.size());
      slots_.emplace_back();
    } else {
      slot = free_slots_.back();
      free_slots_.pop_back();
    }
    EdgeRecord& rec = slots_[slot];
    rec.edge = e;
    rec.seq = next_seq_++;
    rec.alive = true;
    rec.pos_out = static_cast<std::uint32_t>(out_[static_cast<std::size_t>(du)].size());
    rec.pos_in = static_cast<std::uint32_t>(in_[static_cast<std::size_t>(dv)].size());
    out_[static_cast<std::size_t>(du)].push_back({dv, slot});
    in_[static_cast<std::size_t>(dv)].push_back({du, slot});

    bump_degree(du);
    bump_degree(dv);
    ++alive_edges_;

    if (!e.infinite()) calendar_[e.arrival + e.lifetime].push_back(slot);
  }
  std::sort(last_batch_new_nodes_.begin(), last_batch_new_nodes_.end());
}

void TdnGraph::detach(std::uint32_t slot) {
  EdgeRecord& rec = slots_[slot];
  std::int32_t du = dense_of(rec.edge.source);
  std::int32_t dv = dense_of(rec.edge.target);

  auto& out_list = out_[static_cast<std::size_t>(du)];
  std::uint32_t p = rec.pos_out;
  out_list[p] = out_list.back();
  slots_[out_list[p].slot].pos_out = p;
  out_list.pop_back();

  auto& in_list = in_[static_cast<std::size_t>(dv)];
  p = rec.pos_in;
  in_list[p] = in_list.back();
  slots_[in_list[p].slot].pos_in = p;
  in_list.pop_back();

  rec.alive = false;
  free_slots_.push_back(slot);
}

ExpiryReport TdnGraph::advance_time() {
  ++now_;
  ExpiryReport report;
  auto bucket = calendar_.find(now_);
  if (bucket == calendar_.end()) return report;

  for (std::uint32_t slot : bucket->second) {
    EdgeRecord& rec = slots_[slot];
    report.expired_edges.push_back(rec.edge);
    std::int32_t du = dense_of(rec.edge.source);
    std::int32_t dv = dense_of(rec.edge.target);
    detach(slot);
    drop_degree(du, report.removed_nodes);
    drop_degree(dv, report.removed_nodes);
    --alive_edges_;
  }
  calendar_.erase(bucket);
  std::sort(report.removed_nodes.begin(), report.removed_nodes.end());
  return report;
}

std::vector<Interaction> TdnGraph::edges_with_remaining_lifetime_in(
    Lifetime low, Lifetime high) const {
  if (low < 1) throw std::invalid_argument("remaining lifetime range starts at 1");
  if (high <= low) return {};

  std::vector<std::pair<std::uint64_t, Interaction>> found;
  bool unbounded = high == kInfiniteLifetime;
  // Each calendar bucket holds the edges expiring at one timestep, so a
  // bounded range is a handful of bucket probes. Wide or unbounded ranges
  // fall back to one scan over the slot table.
  if (unbounded || high - low > static_cast<Lifetime>(slots_.size()) ||
      high > kInfiniteLifetime - now_) {
    for (const EdgeRecord& rec : slots_) {
      if (!rec.alive) continue;
      Lifetime r = rec.edge.remaining_at(now_);
      if (r >= low && (unbounded || r < high)) found.emplace_back(rec.seq, rec.edge);
    }
  } else {
    for (Timestep t = now_ + low; t < now_ + high; ++t) {
      auto bucket = calendar_.find(t);
      if (bucket == calendar_.end()) continue;
      for (std::uint32_t slot : bucket->second) {
        const EdgeRecord& rec = slots_[slot];
        if (rec.alive) found.emplace_back(rec.seq, rec.edge);
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Interaction> edges;
  edges.reserve(found.size());
  for (auto& [seq, e] : found) edges.push_back(e);
  return edges;
}

std::vector<Interaction> TdnGraph::alive_edges() const {
  std::vector<std::pair<std::uint64_t, Interaction>> found;
  for (const EdgeRecord& rec : slots_) {
    if (rec.alive) found.emplace_back(rec.seq, rec.edge);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Interaction> edges;
  edges.reserve(found.size());
  for (auto& [seq, e] : found) edges.push_back(e);
  return edges;
}

std::vector<NodeId> TdnGraph::alive_node_ids() const {
  std::vector<NodeId> nodes;
  nodes.reserve(alive_nodes_);
  for (std::size_t d = 0; d < ids_.size(); ++d) {
    if (degree_[d] > 0) nodes.push_back(ids_[d]);
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace tdn
