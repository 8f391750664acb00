#pragma once

#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "tdn/node_set.hpp"
#include "tdn/oracle.hpp"
#include "tdn/oracle_counter.hpp"
#include "tdn/rng.hpp"
#include "tdn/types.hpp"

namespace tdn {

// Plain greedy: k rounds, each adding the node with the largest marginal
// gain, smallest id on ties, stopping early once no node gains anything.
// The returned value telescopes to the exact spread of the selection.
template <GraphView G>
Solution greedy(const G& g, int k, OracleCounter& counter,
                CallKind kind = CallKind::kQuery, SpreadOptions opts = {}) {
  Solution sol;
  if (k <= 0) return sol;
  std::vector<NodeId> candidates = g.alive_node_ids();

  for (int round = 0; round < k; ++round) {
    std::int64_t best_gain = 0;
    NodeId best_v = -1;
    for (NodeId v : candidates) {
      if (sol.nodes.contains(v)) continue;
      std::int64_t gain = marginal_gain(g, sol.nodes, v, counter, kind, opts);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    if (best_v < 0) break;  // nothing gains: adding more nodes is pointless
    sol.nodes.insert(best_v);
    sol.value += best_gain;
  }
  return sol;
}

// Greedy with lazy re-evaluation: cached gains only shrink as the selection
// grows, so the top of the heap is selected outright when its cache is
// fresh for the current round. Returns exactly greedy's selection (the heap
// breaks gain ties toward smaller ids, like the scan above) with at most as
// many oracle calls.
template <GraphView G>
Solution lazy_greedy(const G& g, int k, OracleCounter& counter,
                     CallKind kind = CallKind::kQuery, SpreadOptions opts = {}) {
  Solution sol;
  if (k <= 0) return sol;

  struct Entry {
    std::int64_t gain;
    NodeId id;
    int round;
  };
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.gain != b.gain) return a.gain < b.gain;
      return a.id > b.id;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Worse> heap;

  // The initial pass doubles as round 1: the selection is still empty, so
  // these gains are already current when round 1 pops them.
  for (NodeId v : g.alive_node_ids()) {
    heap.push({marginal_gain(g, sol.nodes, v, counter, kind, opts), v, 1});
  }

  for (int round = 1; round <= k && !heap.empty(); ++round) {
    while (!heap.empty()) {
      Entry top = heap.top();
      if (top.round == round) {
        heap.pop();
        if (top.gain <= 0) return sol;  // freshest best gains nothing: stop
        sol.nodes.insert(top.id);
        sol.value += top.gain;
        break;
      }
      heap.pop();
      heap.push({marginal_gain(g, sol.nodes, top.id, counter, kind, opts),
                 top.id, round});
    }
  }
  return sol;
}

// Uniform random selection of min(k, |V|) alive nodes; one oracle call to
// price the pick. Partial Fisher-Yates over the sorted id list keeps the
// draw sequence reproducible.
template <GraphView G>
Solution random_solution(const G& g, int k, std::mt19937_64& rng,
                         OracleCounter& counter,
                         CallKind kind = CallKind::kQuery,
                         SpreadOptions opts = {}) {
  Solution sol;
  if (k <= 0) return sol;
  std::vector<NodeId> pool = g.alive_node_ids();
  std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), pool.size());
  for (std::size_t i = 0; i < take; ++i) {
    std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  if (pool.empty()) return sol;
  for (NodeId v : pool) sol.nodes.insert(v);
  sol.value = spread(g, sol.nodes, counter, kind, opts);
  return sol;
}

}  // namespace tdn
