#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tdn/adn_view.hpp"
#include "tdn/graph.hpp"
#include "tdn/node_set.hpp"
#include "tdn/oracle_counter.hpp"
#include "tdn/sieve_adn.hpp"
#include "tdn/types.hpp"

namespace tdn {

namespace detail {

// Which positions an anchored redundancy walk would delete from an ascending
// histogram with these solution values: starting at the strongest (first)
// instance, everything strictly between an anchor and the furthest instance
// still worth (1 - eps) of it is redundant; the walk re-anchors there and
// repeats. Returns one flag per position, true = drop.
std::vector<bool> reduce_plan(const std::vector<std::int64_t>& values,
                              double eps);

}  // namespace detail

// Influence maximization over a decaying network with sublinear instance
// count. Keeps addition-only maximizers at a sparse set of remaining-lifetime
// indices: the instance at index x holds exactly the alive edges that will
// survive at least x more steps. Arriving edges feed every instance at or
// below their lifetime; missing indices are materialized by cloning the
// nearest higher instance and backfilling the gap from the live graph; and
// after each step, instances whose solution values pin each other within a
// (1 - eps) factor are squeezed out, which is what keeps the histogram
// logarithmic instead of linear in the lifetime range.
//
// Queries read the lowest-index instance. Its index may exceed 1 after
// pruning, in which case short-lived edges are invisible to it: the plain
// answer trades that for zero extra oracle work, while the refined variant
// rebuilds the exact head on demand by cloning the lowest instance and
// replaying the missing edges from the live graph.
class HistApprox {
 public:
  HistApprox(int k, double epsilon, bool refined_head, SpreadOptions opts = {});

  // Processes one timestep. `graph` is the live decaying network and must
  // already contain `batch`; it is consulted to backfill clones (and, when
  // refined, queries). Lifetimes must be finite and >= 1.
  std::optional<Solution> step(const TdnGraph& graph,
                               std::span<const Interaction> batch,
                               bool want_solution, OracleCounter& counter);

  int k() const { return k_; }
  double epsilon() const { return eps_; }
  bool refined_head() const { return refined_head_; }

  std::size_t instance_count() const { return entries_.size(); }
  std::int64_t steps_taken() const { return step_count_; }

  struct EntryInfo {
    Lifetime index;         // remaining-lifetime level, >= 1
    std::uint64_t id;       // stable across index decrements
    std::int64_t value;     // solution value at the last evaluation
    std::size_t num_edges;  // view size
  };
  std::vector<EntryInfo> histogram() const;  // ascending by index

  // The accumulated view at one index, or nullptr when the index is not
  // materialized. Test access for the containment invariant.
  const AdnView* view_at(Lifetime index) const;

  struct ReduceReport {
    std::size_t evaluated = 0;  // instances re-priced this step
    std::size_t pruned = 0;     // instances deleted this step
  };
  const ReduceReport& last_reduce_report() const { return last_reduce_; }

  // Bounded structural history for offline verification: which indices were
  // created (fresh or cloned) and which were pruned between which anchors.
  struct CreateEvent {
    std::int64_t step;
    Lifetime index;
    bool cloned;
  };
  struct PruneEvent {
    std::int64_t step;
    Lifetime removed;
    Lifetime left, right;          // surviving anchors
    std::int64_t g_left, g_right;  // their values at prune time
  };
  const std::deque<CreateEvent>& create_log() const { return create_log_; }
  const std::deque<PruneEvent>& prune_log() const { return prune_log_; }
  bool log_overflowed() const { return log_overflowed_; }

 private:
  struct Entry {
    std::uint64_t id;
    SieveAdn sieve;
    AdnView view;
    Solution cached;
    bool dirty = true;
  };

  void feed(Entry& entry, std::span<const Interaction> edges,
            OracleCounter& counter);
  void evaluate_and_reduce(OracleCounter& counter);

  int k_;
  double eps_;
  bool refined_head_;
  SpreadOptions opts_;

  // Keyed by index + step_count_, so advancing the clock never rekeys.
  std::map<Lifetime, Entry> entries_;
  std::int64_t step_count_ = 0;
  std::uint64_t next_id_ = 1;

  ReduceReport last_reduce_;
  std::deque<CreateEvent> create_log_;
  std::deque<PruneEvent> prune_log_;
  bool log_overflowed_ = false;
};

}  // namespace tdn
