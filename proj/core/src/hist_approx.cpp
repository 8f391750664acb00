#include "tdn/hist_approx.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "tdn/oracle.hpp"

namespace tdn {

namespace {
constexpr std::size_t kLogCapacity = 4096;

template <typename Log, typename Event>
void append_capped(Log& log, Event&& event, bool& overflowed) {
  if (log.size() >= kLogCapacity) {
    log.pop_front();
    overflowed = true;
  }
  log.push_back(std::forward<Event>(event));
}
}  // namespace

HistApprox::HistApprox(int k, double epsilon, bool refined_head,
                       SpreadOptions opts)
    : k_(k), eps_(epsilon), refined_head_(refined_head), opts_(opts) {
  // Parameter validation lives in the sieve; construct one to fail fast.
  SieveAdn probe(k, epsilon, opts);
  (void)probe;
}

void HistApprox::feed(Entry& entry, std::span<const Interaction> edges,
                      OracleCounter& counter) {
  entry.view.add_batch(edges);
  NodeSet affected = affected_nodes(entry.view, edges, opts_);
  entry.sieve.process_batch(entry.view, affected, counter, CallKind::kUpdate);
  entry.dirty = true;
}

std::optional<Solution> HistApprox::step(const TdnGraph& graph,
                                         std::span<const Interaction> batch,
                                         bool want_solution,
                                         OracleCounter& counter) {
  for (const Interaction& e : batch) {
    if (e.lifetime < 1 || e.lifetime == kInfiniteLifetime) {
      throw std::invalid_argument(
          "interaction lifetime must be finite and >= 1, got " +
          std::to_string(e.lifetime));
    }
  }

  // Group the batch by lifetime; groups are handled from the longest-lived
  // down so each backfill range [l, successor) is closed before anything
  // below it is materialized.
  std::map<Lifetime, std::vector<Interaction>> groups;
  for (const Interaction& e : batch) groups[e.lifetime].push_back(e);

  for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
    Lifetime index = g->first;
    Lifetime key = index + step_count_;
    auto it = entries_.find(key);
    bool just_cloned = false;

    if (it == entries_.end()) {
      auto succ = entries_.upper_bound(key);
      if (succ == entries_.end()) {
        // Nothing outlives these edges: open a fresh top instance.
        it = entries_
                 .emplace(key, Entry{next_id_++, SieveAdn(k_, eps_, opts_),
                                     AdnView{}, Solution{}, true})
                 .first;
        append_capped(create_log_, CreateEvent{step_count_, index, false},
                      log_overflowed_);
      } else {
        // Materialize the missing level: everything the next level holds,
        // plus the alive edges whose remaining lifetime falls in the gap
        // (the current group is already among them).
        Entry clone{next_id_++, succ->second.sieve, succ->second.view,
                    Solution{}, true};
        Lifetime succ_index = succ->first - step_count_;
        auto backlog = graph.edges_with_remaining_lifetime_in(index, succ_index);
        feed(clone, backlog, counter);
        it = entries_.emplace(key, std::move(clone)).first;
        append_capped(create_log_, CreateEvent{step_count_, index, true},
                      log_overflowed_);
        just_cloned = true;
      }
    }

    // The group belongs to every instance at or below its lifetime. A clone
    // made above already swallowed it through the backfill.
    for (auto e = entries_.begin(); e != entries_.end() && e->first <= key;
         ++e) {
      if (just_cloned && e->first == key) continue;
      feed(e->second, g->second, counter);
    }
  }

  evaluate_and_reduce(counter);

  std::optional<Solution> out;
  if (want_solution) {
    if (entries_.empty()) {
      out = Solution{};
    } else {
      auto& [min_key, head] = *entries_.begin();
      Lifetime min_index = min_key - step_count_;
      std::vector<Interaction> missing;
      if (refined_head_ && min_index > 1) {
        missing = graph.edges_with_remaining_lifetime_in(1, min_index);
      }
      if (missing.empty()) {
        // The lowest instance already holds every alive edge (or the
        // refinement is off): its last evaluation is the answer.
        out = head.cached;
      } else {
        Entry scratch{0, head.sieve, head.view, Solution{}, true};
        scratch.view.add_batch(missing);
        NodeSet affected = affected_nodes(scratch.view, missing, opts_);
        scratch.sieve.process_batch(scratch.view, affected, counter,
                                    CallKind::kQuery);
        out = scratch.sieve.current_solution(scratch.view, counter,
                                             CallKind::kQuery);
      }
    }
  }

  entries_.erase(step_count_ + 1);  // index 1 dies with its edges
  ++step_count_;
  return out;
}

namespace detail {

std::vector<bool> reduce_plan(const std::vector<std::int64_t>& values,
                              double eps) {
  std::vector<bool> drop(values.size(), false);
  std::size_t anchor = 0;
  while (anchor < values.size()) {
    std::size_t furthest = anchor;
    for (std::size_t probe = anchor + 1; probe < values.size(); ++probe) {
      if (static_cast<double>(values[probe]) >=
          (1.0 - eps) * static_cast<double>(values[anchor])) {
        furthest = probe;
      }
    }
    if (furthest == anchor) {
      ++anchor;
      continue;
    }
    for (std::size_t doomed = anchor + 1; doomed < furthest; ++doomed) {
      drop[doomed] = true;
    }
    anchor = furthest;
  }
  return drop;
}

}  // namespace detail

void HistApprox::evaluate_and_reduce(OracleCounter& counter) {
  last_reduce_ = {};

  std::vector<std::int64_t> values;
  values.reserve(entries_.size());
  for (auto& [key, entry] : entries_) {
    if (entry.dirty) {
      entry.cached =
          entry.sieve.current_solution(entry.view, counter, CallKind::kUpdate);
      entry.dirty = false;
      ++last_reduce_.evaluated;
    }
    values.push_back(entry.cached.value);
  }

  std::vector<bool> drop = detail::reduce_plan(values, eps_);

  std::size_t pos = 0;
  auto left = entries_.end();
  for (auto it = entries_.begin(); it != entries_.end(); ++pos) {
    if (!drop[pos]) {
      left = it++;
      continue;
    }
    // The surviving anchors flanking a dropped run: reduce_plan never drops
    // the first or last position, so both exist.
    auto right = std::next(it);
    std::size_t right_pos = pos + 1;
    while (right_pos < drop.size() && drop[right_pos]) {
      ++right;
      ++right_pos;
    }
    append_capped(prune_log_,
                  PruneEvent{step_count_, it->first - step_count_,
                             left->first - step_count_,
                             right->first - step_count_,
                             left->second.cached.value,
                             right->second.cached.value},
                  log_overflowed_);
    it = entries_.erase(it);
    ++last_reduce_.pruned;
  }
}

const AdnView* HistApprox::view_at(Lifetime index) const {
  auto it = entries_.find(index + step_count_);
  return it == entries_.end() ? nullptr : &it->second.view;
}

std::vector<HistApprox::EntryInfo> HistApprox::histogram() const {
  std::vector<EntryInfo> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) {
    out.push_back({key - step_count_, entry.id, entry.cached.value,
                   entry.view.num_edges()});
  }
  return out;
}

}  // namespace tdn
