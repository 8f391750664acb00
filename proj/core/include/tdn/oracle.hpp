#pragma once

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdn/node_set.hpp"
#include "tdn/oracle_counter.hpp"
#include "tdn/types.hpp"

namespace tdn {

// Anything the influence oracle can traverse: the live decaying graph or a
// sieve instance's private addition-only view. Nodes are exposed through a
// dense index space so traversal scratch is flat arrays.
template <typename G>
concept GraphView = requires(const G& g, NodeId u, std::int32_t d) {
  { g.dense_count() } -> std::convertible_to<std::int32_t>;
  { g.dense_of(u) } -> std::convertible_to<std::int32_t>;
  { g.node_of(d) } -> std::convertible_to<NodeId>;
  { g.node_alive(d) } -> std::convertible_to<bool>;
  { g.num_alive_nodes() } -> std::convertible_to<std::size_t>;
  { g.alive_node_ids() } -> std::convertible_to<std::vector<NodeId>>;
  { g.last_batch_new_nodes() } -> std::convertible_to<std::span<const NodeId>>;
  g.for_each_out(d, [](std::int32_t) {});
  g.for_each_in(d, [](std::int32_t) {});
  g.for_each_out_pre_batch(d, [](std::int32_t) {});
};

struct SpreadOptions {
  // When true, a seed present in the graph counts itself through the
  // zero-length path. When false, only nodes reached through at least one
  // edge contribute.
  bool seed_self_counts = true;
};

namespace detail {

// Reusable traversal scratch. A node is "marked" when its slot equals the
// current epoch, so starting a fresh traversal is one counter bump instead of
// an O(n) clear or a fresh allocation.
struct TraversalScratch {
  std::vector<std::uint32_t> visited;
  std::vector<std::uint32_t> counted;
  std::vector<std::int32_t> work;
  std::uint32_t epoch = 0;

  void begin(std::size_t n) {
    if (visited.size() < n) {
      visited.resize(n, 0);
      counted.resize(n, 0);
    }
    if (++epoch == 0) {  // wrapped: every stale slot looks current, so reset
      std::fill(visited.begin(), visited.end(), 0);
      std::fill(counted.begin(), counted.end(), 0);
      epoch = 1;
    }
  }
  bool is_visited(std::int32_t i) const {
    return visited[static_cast<std::size_t>(i)] == epoch;
  }
  void set_visited(std::int32_t i) {
    visited[static_cast<std::size_t>(i)] = epoch;
  }
  bool is_counted(std::int32_t i) const {
    return counted[static_cast<std::size_t>(i)] == epoch;
  }
  void set_counted(std::int32_t i) {
    counted[static_cast<std::size_t>(i)] = epoch;
  }
};

inline TraversalScratch& traversal_scratch() {
  thread_local TraversalScratch scratch;
  return scratch;
}

// Depth-first reachability sweep continuing an earlier traversal: nodes
// already visited are not re-expanded. Returns how many nodes were newly
// counted. `start` must be alive in g.
template <GraphView G>
std::int64_t expand_from(const G& g, std::int32_t start, bool self_counts,
                         TraversalScratch& scratch) {
  std::int64_t gained = 0;
  if (!scratch.is_visited(start)) {
    scratch.set_visited(start);
    if (self_counts && !scratch.is_counted(start)) {
      scratch.set_counted(start);
      ++gained;
    }
    scratch.work.push_back(start);
  }
  while (!scratch.work.empty()) {
    std::int32_t u = scratch.work.back();
    scratch.work.pop_back();
    g.for_each_out(u, [&](std::int32_t w) {
      if (!scratch.is_counted(w)) {
        scratch.set_counted(w);
        ++gained;
      }
      if (!scratch.is_visited(w)) {
        scratch.set_visited(w);
        scratch.work.push_back(w);
      }
    });
  }
  return gained;
}

template <GraphView G>
std::int64_t sweep_seeds(const G& g, std::span<const NodeId> seeds,
                         SpreadOptions opts, TraversalScratch& scratch) {
  std::int64_t total = 0;
  for (NodeId s : seeds) {
    std::int32_t d = g.dense_of(s);
    if (d < 0 || !g.node_alive(d)) continue;  // seeds may be absent or expired
    total += expand_from(g, d, opts.seed_self_counts, scratch);
  }
  return total;
}

// Strongly-connected-component condensation of one graph snapshot, with
// per-component closure bitsets. Building it costs one pass over the graph;
// afterwards singleton spreads, set closures, and marginal gains are bit
// arithmetic over components instead of fresh traversals. All answers equal
// the traversal-based oracles exactly (alive nodes reachable, seeds counting
// themselves). Valid until the underlying graph changes.
class CondensedSpread {
 public:
  // Snapshots the full adjacency, or the pre-batch adjacency (edges that
  // precede the most recent batch).
  template <GraphView G>
  void build(const G& g) {
    build_impl(g, false);
  }
  template <GraphView G>
  void build_pre_batch(const G& g) {
    build_impl(g, true);
  }

  std::int32_t comp_count() const { return comp_count_; }
  std::size_t words() const { return words_; }
  std::int32_t comp_of(std::int32_t dense) const {
    return comp_[static_cast<std::size_t>(dense)];
  }

  // Components are numbered in reverse topological order, so cross edges go
  // from higher to lower ids and one ordered pass per direction settles every
  // closure.
  void ensure_forward_closures() {
    if (have_fwd_) return;
    fill_diagonal(fwd_);
    for (auto [c, d] : dag_edges_) or_rows(fwd_, c, d);
    have_fwd_ = true;
  }

  void ensure_reverse_closures() {
    if (have_rev_) return;
    fill_diagonal(rev_);
    for (auto it = dag_edges_.rbegin(); it != dag_edges_.rend(); ++it) {
      or_rows(rev_, it->second, it->first);
    }
    have_rev_ = true;
  }

  const std::uint64_t* forward_row(std::int32_t comp) const {
    return fwd_.data() + static_cast<std::size_t>(comp) * words_;
  }

  bool in_forward_closure(std::int32_t comp, std::int32_t member) const {
    return (forward_row(comp)[static_cast<std::size_t>(member) >> 6] >>
            (static_cast<std::size_t>(member) & 63)) &
           1;
  }

  // Alive nodes reachable from comp and not already covered by `base` (a
  // component bitset); pass nullptr for an empty base. With the empty base
  // this is the singleton spread of any alive node in comp, memoized.
  std::int64_t gain_over(std::int32_t comp, const std::uint64_t* base) {
    if (base == nullptr) {
      auto& memo = comp_value_[static_cast<std::size_t>(comp)];
      if (memo < 0) memo = sum_weights(forward_row(comp), nullptr);
      return memo;
    }
    return sum_weights(forward_row(comp), base);
  }

  // OR of comp's forward closure into a caller-held component bitset.
  void add_closure(std::int32_t comp, std::vector<std::uint64_t>& bits) {
    bits.resize(words_, 0);
    const std::uint64_t* row = forward_row(comp);
    for (std::size_t w = 0; w < words_; ++w) bits[w] |= row[w];
  }

  // Union of the forward closures of a seed set's alive members.
  template <GraphView G>
  void set_closure(const G& g, const NodeSet& seeds,
                   std::vector<std::uint64_t>& bits) {
    ensure_forward_closures();
    bits.assign(words_, 0);
    for (NodeId s : seeds.ids()) {
      std::int32_t d = g.dense_of(s);
      if (d < 0 || !g.node_alive(d)) continue;
      add_closure(comp_of(d), bits);
    }
  }

  void or_reverse_closure(std::int32_t comp,
                          std::vector<std::uint64_t>& bits) const {
    bits.resize(words_, 0);
    const std::uint64_t* row = rev_.data() + static_cast<std::size_t>(comp) * words_;
    for (std::size_t w = 0; w < words_; ++w) bits[w] |= row[w];
  }

  // Invokes fn(dense) for every member of every component whose bit is set.
  template <typename Fn>
  void for_each_member_of(const std::vector<std::uint64_t>& bits, Fn&& fn) const {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t m = bits[w];
      while (m != 0) {
        auto c = static_cast<std::size_t>(w * 64 +
                                          static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
        for (std::int32_t i = comp_off_[c]; i < comp_off_[c + 1]; ++i) {
          fn(comp_members_[static_cast<std::size_t>(i)]);
        }
      }
    }
  }

 private:
  template <GraphView G>
  void build_impl(const G& g, bool pre_batch) {
    n_ = g.dense_count();
    auto n = static_cast<std::size_t>(n_);
    have_fwd_ = have_rev_ = false;
    comp_count_ = 0;

    // CSR snapshot of the requested adjacency.
    off_.assign(n + 1, 0);
    auto each_out = [&](std::int32_t u, auto&& fn) {
      if (pre_batch) {
        g.for_each_out_pre_batch(u, fn);
      } else {
        g.for_each_out(u, fn);
      }
    };
    for (std::int32_t u = 0; u < n_; ++u) {
      each_out(u, [&](std::int32_t) { ++off_[static_cast<std::size_t>(u) + 1]; });
    }
    for (std::size_t i = 1; i <= n; ++i) off_[i] += off_[i - 1];
    tgt_.resize(static_cast<std::size_t>(off_[n]));
    fill_ = off_;
    for (std::int32_t u = 0; u < n_; ++u) {
      each_out(u, [&](std::int32_t w) {
        tgt_[static_cast<std::size_t>(fill_[static_cast<std::size_t>(u)]++)] = w;
      });
    }

    tarjan();

    // Component member lists via counting sort, then alive weights.
    comp_off_.assign(static_cast<std::size_t>(comp_count_) + 1, 0);
    for (std::int32_t d = 0; d < n_; ++d) {
      ++comp_off_[static_cast<std::size_t>(comp_[static_cast<std::size_t>(d)]) + 1];
    }
    for (std::size_t c = 1; c <= static_cast<std::size_t>(comp_count_); ++c) {
      comp_off_[c] += comp_off_[c - 1];
    }
    comp_members_.resize(n);
    fill_.assign(comp_off_.begin(), comp_off_.end());
    weight_.assign(static_cast<std::size_t>(comp_count_), 0);
    for (std::int32_t d = 0; d < n_; ++d) {
      auto c = static_cast<std::size_t>(comp_[static_cast<std::size_t>(d)]);
      comp_members_[static_cast<std::size_t>(fill_[c]++)] = d;
      if (g.node_alive(d)) ++weight_[c];
    }

    // Deduplicated condensation edges, grouped by source component ascending.
    dag_edges_.clear();
    seen_.assign(static_cast<std::size_t>(comp_count_), -1);
    for (std::int32_t c = 0; c < comp_count_; ++c) {
      for (std::int32_t i = comp_off_[static_cast<std::size_t>(c)];
           i < comp_off_[static_cast<std::size_t>(c) + 1]; ++i) {
        std::int32_t u = comp_members_[static_cast<std::size_t>(i)];
        for (std::int32_t e = off_[static_cast<std::size_t>(u)];
             e < off_[static_cast<std::size_t>(u) + 1]; ++e) {
          std::int32_t d = comp_[static_cast<std::size_t>(
              tgt_[static_cast<std::size_t>(e)])];
          if (d == c || seen_[static_cast<std::size_t>(d)] == c) continue;
          seen_[static_cast<std::size_t>(d)] = c;
          dag_edges_.emplace_back(c, d);
        }
      }
    }

    words_ = (static_cast<std::size_t>(comp_count_) + 63) / 64;
    fwd_.assign(static_cast<std::size_t>(comp_count_) * words_, 0);
    rev_.assign(static_cast<std::size_t>(comp_count_) * words_, 0);
    comp_value_.assign(static_cast<std::size_t>(comp_count_), -1);
  }

  void tarjan() {
    auto n = static_cast<std::size_t>(n_);
    index_.assign(n, 0);
    low_.assign(n, 0);
    onstack_.assign(n, 0);
    comp_.assign(n, -1);
    stack_.clear();
    frames_.clear();
    std::int32_t next_index = 0;

    for (std::int32_t root = 0; root < n_; ++root) {
      if (index_[static_cast<std::size_t>(root)] != 0) continue;
      frames_.push_back({root, off_[static_cast<std::size_t>(root)]});
      index_[static_cast<std::size_t>(root)] =
          low_[static_cast<std::size_t>(root)] = ++next_index;
      stack_.push_back(root);
      onstack_[static_cast<std::size_t>(root)] = 1;
      while (!frames_.empty()) {
        auto& [v, edge] = frames_.back();
        auto sv = static_cast<std::size_t>(v);
        if (edge < off_[sv + 1]) {
          std::int32_t w = tgt_[static_cast<std::size_t>(edge++)];
          auto sw = static_cast<std::size_t>(w);
          if (index_[sw] == 0) {
            frames_.push_back({w, off_[sw]});
            index_[sw] = low_[sw] = ++next_index;
            stack_.push_back(w);
            onstack_[sw] = 1;
          } else if (onstack_[sw]) {
            low_[sv] = std::min(low_[sv], index_[sw]);
          }
          continue;
        }
        if (low_[sv] == index_[sv]) {
          std::int32_t u;
          do {
            u = stack_.back();
            stack_.pop_back();
            onstack_[static_cast<std::size_t>(u)] = 0;
            comp_[static_cast<std::size_t>(u)] = comp_count_;
          } while (u != v);
          ++comp_count_;
        }
        std::int32_t done_low = low_[sv];
        frames_.pop_back();
        if (!frames_.empty()) {
          auto sp = static_cast<std::size_t>(frames_.back().first);
          low_[sp] = std::min(low_[sp], done_low);
        }
      }
    }
  }

  void fill_diagonal(std::vector<std::uint64_t>& rows) {
    for (std::int32_t c = 0; c < comp_count_; ++c) {
      rows[static_cast<std::size_t>(c) * words_ + (static_cast<std::size_t>(c) >> 6)] |=
          std::uint64_t{1} << (static_cast<std::size_t>(c) & 63);
    }
  }

  void or_rows(std::vector<std::uint64_t>& rows, std::int32_t dst_of_sweep,
               std::int32_t src_of_sweep) {
    std::uint64_t* a = rows.data() + static_cast<std::size_t>(dst_of_sweep) * words_;
    const std::uint64_t* b =
        rows.data() + static_cast<std::size_t>(src_of_sweep) * words_;
    for (std::size_t w = 0; w < words_; ++w) a[w] |= b[w];
  }

  std::int64_t sum_weights(const std::uint64_t* row,
                           const std::uint64_t* minus) const {
    std::int64_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t m = minus == nullptr ? row[w] : row[w] & ~minus[w];
      while (m != 0) {
        auto b = static_cast<std::size_t>(std::countr_zero(m));
        m &= m - 1;
        total += weight_[w * 64 + b];
      }
    }
    return total;
  }

  std::int32_t n_ = 0;
  std::int32_t comp_count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::int32_t> off_, tgt_, fill_;
  std::vector<std::int32_t> index_, low_, stack_;
  std::vector<std::uint8_t> onstack_;
  std::vector<std::pair<std::int32_t, std::int32_t>> frames_;
  std::vector<std::int32_t> comp_;
  std::vector<std::int32_t> comp_off_, comp_members_;
  std::vector<std::int32_t> weight_;
  std::vector<std::int32_t> seen_;
  std::vector<std::pair<std::int32_t, std::int32_t>> dag_edges_;
  std::vector<std::uint64_t> fwd_, rev_;
  std::vector<std::int64_t> comp_value_;
  bool have_fwd_ = false;
  bool have_rev_ = false;
};

}  // namespace detail

// Number of alive nodes reachable from the seed set. One oracle tick.
template <GraphView G>
std::int64_t spread(const G& g, std::span<const NodeId> seeds,
                    OracleCounter& counter, CallKind kind = CallKind::kQuery,
                    SpreadOptions opts = {}) {
  counter.tick(kind);
  auto& scratch = detail::traversal_scratch();
  scratch.begin(static_cast<std::size_t>(g.dense_count()));
  return detail::sweep_seeds(g, seeds, opts, scratch);
}

template <GraphView G>
std::int64_t spread(const G& g, const NodeSet& seeds, OracleCounter& counter,
                    CallKind kind = CallKind::kQuery, SpreadOptions opts = {}) {
  return spread(g, std::span<const NodeId>(seeds.ids()), counter, kind, opts);
}

// spread(base + {v}) - spread(base), evaluated as one incremental
// reachability sweep on top of base's closure. One oracle tick.
template <GraphView G>
std::int64_t marginal_gain(const G& g, const NodeSet& base, NodeId v,
                           OracleCounter& counter,
                           CallKind kind = CallKind::kQuery,
                           SpreadOptions opts = {}) {
  counter.tick(kind);
  if (base.contains(v)) return 0;
  std::int32_t d = g.dense_of(v);
  if (d < 0 || !g.node_alive(d)) return 0;
  auto& scratch = detail::traversal_scratch();
  scratch.begin(static_cast<std::size_t>(g.dense_count()));
  detail::sweep_seeds(g, std::span<const NodeId>(base.ids()), opts, scratch);
  return detail::expand_from(g, d, opts.seed_self_counts, scratch);
}

// Marginal-gain evaluator for many candidates against one shared base set.
// prepare() walks the base closure once; each gain() is an incremental
// expansion layered on top that never re-enters base-marked territory, so a
// candidate already inside the closure costs O(1) instead of a full sweep.
// Returned values and oracle ticks match marginal_gain exactly; prepare()
// itself ticks nothing. Re-prepare whenever the base set or the graph
// changes.
class MarginalEvaluator {
 public:
  template <GraphView G>
  void prepare(const G& g, const NodeSet& base, SpreadOptions opts = {}) {
    opts_ = opts;
    base_ = base;
    auto n = static_cast<std::size_t>(g.dense_count());
    if (base_visited_.size() < n) {
      base_visited_.resize(n, 0);
      base_counted_.resize(n, 0);
      delta_visited_.resize(n, 0);
      delta_counted_.resize(n, 0);
    }
    if (++base_epoch_ == 0) {
      std::fill(base_visited_.begin(), base_visited_.end(), 0);
      std::fill(base_counted_.begin(), base_counted_.end(), 0);
      base_epoch_ = 1;
    }
    base_value_ = 0;
    for (NodeId s : base_.ids()) {
      std::int32_t d = g.dense_of(s);
      if (d < 0 || !g.node_alive(d)) continue;
      base_value_ += expand_base(g, d);
    }
  }

  // spread(base) as of the last prepare().
  std::int64_t base_value() const { return base_value_; }

  // spread(base + {v}) - spread(base). One oracle tick.
  template <GraphView G>
  std::int64_t gain(const G& g, NodeId v, OracleCounter& counter,
                    CallKind kind = CallKind::kQuery) {
    counter.tick(kind);
    if (base_.contains(v)) return 0;
    std::int32_t d = g.dense_of(v);
    if (d < 0 || !g.node_alive(d)) return 0;
    if (++delta_epoch_ == 0) {
      std::fill(delta_visited_.begin(), delta_visited_.end(), 0);
      std::fill(delta_counted_.begin(), delta_counted_.end(), 0);
      delta_epoch_ = 1;
    }
    return expand_delta(g, d);
  }

 private:
  bool seen(const std::vector<std::uint32_t>& marks, std::uint32_t epoch,
            std::int32_t i) const {
    return marks[static_cast<std::size_t>(i)] == epoch;
  }

  template <GraphView G>
  std::int64_t expand_base(const G& g, std::int32_t start) {
    std::int64_t gained = 0;
    if (!seen(base_visited_, base_epoch_, start)) {
      base_visited_[static_cast<std::size_t>(start)] = base_epoch_;
      if (opts_.seed_self_counts && !seen(base_counted_, base_epoch_, start)) {
        base_counted_[static_cast<std::size_t>(start)] = base_epoch_;
        ++gained;
      }
      work_.push_back(start);
    }
    while (!work_.empty()) {
      std::int32_t u = work_.back();
      work_.pop_back();
      g.for_each_out(u, [&](std::int32_t w) {
        if (!seen(base_counted_, base_epoch_, w)) {
          base_counted_[static_cast<std::size_t>(w)] = base_epoch_;
          ++gained;
        }
        if (!seen(base_visited_, base_epoch_, w)) {
          base_visited_[static_cast<std::size_t>(w)] = base_epoch_;
          work_.push_back(w);
        }
      });
    }
    return gained;
  }

  template <GraphView G>
  std::int64_t expand_delta(const G& g, std::int32_t start) {
    auto visited = [&](std::int32_t i) {
      return seen(base_visited_, base_epoch_, i) ||
             seen(delta_visited_, delta_epoch_, i);
    };
    auto counted = [&](std::int32_t i) {
      return seen(base_counted_, base_epoch_, i) ||
             seen(delta_counted_, delta_epoch_, i);
    };
    std::int64_t gained = 0;
    if (!visited(start)) {
      delta_visited_[static_cast<std::size_t>(start)] = delta_epoch_;
      if (opts_.seed_self_counts && !counted(start)) {
        delta_counted_[static_cast<std::size_t>(start)] = delta_epoch_;
        ++gained;
      }
      work_.push_back(start);
    }
    while (!work_.empty()) {
      std::int32_t u = work_.back();
      work_.pop_back();
      g.for_each_out(u, [&](std::int32_t w) {
        if (!counted(w)) {
          delta_counted_[static_cast<std::size_t>(w)] = delta_epoch_;
          ++gained;
        }
        if (!visited(w)) {
          delta_visited_[static_cast<std::size_t>(w)] = delta_epoch_;
          work_.push_back(w);
        }
      });
    }
    return gained;
  }

  SpreadOptions opts_;
  NodeSet base_;
  std::int64_t base_value_ = 0;
  std::vector<std::uint32_t> base_visited_;
  std::vector<std::uint32_t> base_counted_;
  std::vector<std::uint32_t> delta_visited_;
  std::vector<std::uint32_t> delta_counted_;
  std::vector<std::int32_t> work_;
  std::uint32_t base_epoch_ = 0;
  std::uint32_t delta_epoch_ = 0;
};

// Nodes whose influence spread may have changed because of the batch that was
// just inserted. A superset of the exact changed set, built from
//   - endpoints that just became alive (their spread went from 0 to >= 1
//     under self-counting), and
//   - the reverse-reachable sets of batch sources whose own forward closure
//     actually grew. A source whose new edges are all redundant (every target
//     already reachable) changes nobody's spread and contributes nothing.
// Ticks no oracle calls; this is stream bookkeeping, not an f evaluation.
template <GraphView G>
NodeSet affected_nodes(const G& g, std::span<const Interaction> new_edges,
                       SpreadOptions opts = {}) {
  if (new_edges.empty()) return {};

  std::vector<NodeId> result;
  if (opts.seed_self_counts) {
    auto fresh = g.last_batch_new_nodes();
    result.assign(fresh.begin(), fresh.end());
  }

  std::vector<std::pair<std::int32_t, std::int32_t>> batch_pairs;
  batch_pairs.reserve(new_edges.size());
  std::vector<std::int32_t> sources;
  sources.reserve(new_edges.size());
  for (const Interaction& e : new_edges) {
    std::int32_t da = g.dense_of(e.source);
    std::int32_t db = g.dense_of(e.target);
    batch_pairs.emplace_back(da, db);
    sources.push_back(da);
  }
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

  // Condense both snapshots once; per source the growth test is a pair of
  // bit probes and the reverse-reachable set is one row OR.
  thread_local detail::CondensedSpread pre;
  thread_local detail::CondensedSpread post;
  thread_local std::vector<std::uint64_t> mask;
  pre.build_pre_batch(g);
  pre.ensure_forward_closures();
  bool any_changed = false;

  for (std::int32_t du : sources) {
    // The closure grew iff some batch edge leads out of it.
    std::int32_t cu = pre.comp_of(du);
    bool changed = false;
    for (auto [da, db] : batch_pairs) {
      if (pre.in_forward_closure(cu, pre.comp_of(da)) &&
          !pre.in_forward_closure(cu, pre.comp_of(db))) {
        changed = true;
        break;
      }
    }
    if (!changed) continue;

    if (!any_changed) {
      any_changed = true;
      post.build(g);
      post.ensure_reverse_closures();
      mask.assign(post.words(), 0);
    }
    post.or_reverse_closure(post.comp_of(du), mask);
  }

  if (any_changed) {
    post.for_each_member_of(mask, [&](std::int32_t d) {
      if (g.node_alive(d)) result.push_back(g.node_of(d));
    });
  }

  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return NodeSet::from_sorted_unique(std::move(result));
}

// Exact cardinality-k maximizer by exhaustive enumeration, for verifying the
// streaming algorithms at desk scale. Ties break toward the lexicographically
// smallest node-id combination. Refuses instances with more than a million
// candidate subsets.
template <GraphView G>
Solution brute_force_opt(const G& g, int k, OracleCounter& counter,
                         CallKind kind = CallKind::kQuery,
                         SpreadOptions opts = {}) {
  if (k <= 0) return {};
  std::vector<NodeId> alive = g.alive_node_ids();
  auto n = alive.size();
  auto kk = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  if (kk == 0) return {};

  double combos = 1.0;
  for (std::size_t i = 0; i < kk; ++i) {
    combos *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (combos > 1e6) {
      throw std::runtime_error(
          "brute_force_opt: search space exceeds 1e6 subsets (|V|=" +
          std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
  }

  std::vector<std::size_t> idx(kk);
  for (std::size_t i = 0; i < kk; ++i) idx[i] = i;

  Solution best;
  std::vector<NodeId> comb(kk);
  while (true) {
    for (std::size_t i = 0; i < kk; ++i) comb[i] = alive[idx[i]];
    std::int64_t value = spread(g, std::span<const NodeId>(comb), counter, kind, opts);
    if (value > best.value) {
      best.value = value;
      best.nodes = NodeSet::from_sorted_unique(comb);
    }
    // next combination in lexicographic order
    std::size_t i = kk;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - kk) {
        ++idx[i];
        for (std::size_t j = i + 1; j < kk; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return best;
    }
  }
}

}  // namespace tdn
