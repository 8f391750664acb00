#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "tdn/node_set.hpp"
#include "tdn/oracle.hpp"
#include "tdn/oracle_counter.hpp"
#include "tdn/types.hpp"

namespace tdn {

// Streaming (1/2 - eps)-approximate influence maximizer for addition-only
// graphs. Maintains one candidate set per threshold on a geometric ladder
// spanning [delta, 2k*delta], where delta is the best singleton spread seen
// so far; a node joins a candidate set when its marginal gain clears the
// set's threshold. Feed it every node whose spread a batch may have changed,
// then read the best candidate set back.
//
// The ladder is rebuilt lazily when delta grows: thresholds leaving the
// window drop their candidate sets, thresholds entering start empty.
class SieveAdn {
 public:
  SieveAdn(int k, double epsilon, SpreadOptions opts = {})
      : k_(k), eps_(epsilon), opts_(opts) {
    if (k < 1) throw std::invalid_argument("seed budget k must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
  }

  // Streams the affected nodes of one batch through every sieve. Spends at
  // most |affected| * (|thresholds| + 1) oracle calls.
  template <GraphView G>
  void process_batch(const G& view, const NodeSet& affected,
                     OracleCounter& counter,
                     CallKind kind = CallKind::kUpdate) {
    // The graph behind `view` changed since the last batch, so every cached
    // base closure is stale.
    ++batch_gen_;
    // Under self-counting spreads every evaluation reduces to component
    // arithmetic on one condensation of the batch snapshot. The traversal
    // path stays for the other spread mode.
    const bool condensed = opts_.seed_self_counts;
    if (condensed && !affected.empty()) {
      cond_.build(view);
      cond_.ensure_forward_closures();
    }
    for (NodeId v : affected) {
      std::int32_t dv = -1;
      std::int64_t singleton;
      if (condensed) {
        counter.tick(kind);
        dv = view.dense_of(v);
        singleton = dv < 0 || !view.node_alive(dv)
                        ? 0
                        : cond_.gain_over(cond_.comp_of(dv), nullptr);
      } else {
        singleton =
            spread(view, std::span<const NodeId>(&v, 1), counter, kind, opts_);
      }
      if (singleton > delta_) {
        delta_ = singleton;
        rebuild_ladder();
      }
      for (auto& [exp, set] : sieves_) {
        double theta = threshold_of(exp);
        // Thresholds ascend with the exponent and marginal gains never
        // exceed the singleton spread, so once the singleton falls short the
        // remaining sieves are out of reach.
        if (static_cast<double>(singleton) < theta) break;
        if (set.size() >= static_cast<std::size_t>(k_)) continue;
        if (set.contains(v)) continue;
        std::int64_t gain;
        if (set.empty()) {
          gain = singleton;
        } else if (condensed) {
          CondSlot& slot = cond_slots_[exp];
          if (slot.gen != batch_gen_) {
            cond_.set_closure(view, set, slot.bits);
            slot.gen = batch_gen_;
          }
          counter.tick(kind);
          gain = dv < 0 || !view.node_alive(dv)
                     ? 0
                     : cond_.gain_over(cond_.comp_of(dv), slot.bits.data());
        } else {
          EvalSlot& slot = evals_[exp];
          if (slot.gen != batch_gen_) {
            slot.eval.prepare(view, set, opts_);
            slot.gen = batch_gen_;
          }
          gain = slot.eval.gain(view, v, counter, kind);
        }
        if (static_cast<double>(gain) >= theta) {
          set.insert(v);
          if (auto it = evals_.find(exp); it != evals_.end()) it->second.gen = 0;
          if (auto it = cond_slots_.find(exp); it != cond_slots_.end()) {
            it->second.gen = 0;
          }
        }
      }
    }
  }

  // Best candidate set by influence spread; ties keep the lowest threshold.
  // Spends one oracle call per non-empty candidate set.
  template <GraphView G>
  Solution current_solution(const G& view, OracleCounter& counter,
                            CallKind kind = CallKind::kQuery) const {
    Solution best;
    for (const auto& [exp, set] : sieves_) {
      if (set.empty()) continue;
      std::int64_t value = spread(view, set, counter, kind, opts_);
      if (value > best.value) {
        best.value = value;
        best.nodes = set;
      }
    }
    return best;
  }

  int k() const { return k_; }
  double epsilon() const { return eps_; }
  const SpreadOptions& spread_options() const { return opts_; }
  std::int64_t delta() const { return delta_; }

  double threshold_of(int exponent) const {
    return std::pow(1.0 + eps_, exponent) / (2.0 * k_);
  }

  std::vector<int> exponents() const {
    std::vector<int> out;
    out.reserve(sieves_.size());
    for (const auto& [exp, set] : sieves_) out.push_back(exp);
    return out;
  }

  std::vector<double> thresholds() const {
    std::vector<double> out;
    out.reserve(sieves_.size());
    for (const auto& [exp, set] : sieves_) out.push_back(threshold_of(exp));
    return out;
  }

  const std::map<int, NodeSet>& candidate_sets() const { return sieves_; }

 private:
  // Prepared base closure for one candidate set, reused across the nodes of a
  // batch. `gen` names the batch it was prepared in; 0 is always stale.
  struct EvalSlot {
    MarginalEvaluator eval;
    std::int64_t gen = 0;
  };
  struct CondSlot {
    std::vector<std::uint64_t> bits;
    std::int64_t gen = 0;
  };

  void rebuild_ladder() {
    if (delta_ == 0) {
      sieves_.clear();
      evals_.clear();
      cond_slots_.clear();
      return;
    }
    double base = std::log1p(eps_);
    double d = static_cast<double>(delta_);
    int lo = static_cast<int>(std::ceil(std::log(d) / base - 1e-9));
    int hi = static_cast<int>(
        std::floor(std::log(2.0 * k_ * d) / base + 1e-9));
    auto out_of_window = [&](const auto& kv) {
      return kv.first < lo || kv.first > hi;
    };
    std::erase_if(sieves_, out_of_window);
    std::erase_if(evals_, out_of_window);
    std::erase_if(cond_slots_, out_of_window);
    for (int i = lo; i <= hi; ++i) sieves_.try_emplace(i);
  }

  int k_;
  double eps_;
  SpreadOptions opts_;
  std::int64_t delta_ = 0;
  std::map<int, NodeSet> sieves_;
  std::map<int, EvalSlot> evals_;
  std::map<int, CondSlot> cond_slots_;
  detail::CondensedSpread cond_;
  std::int64_t batch_gen_ = 0;
};

}  // namespace tdn
