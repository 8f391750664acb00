#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "tdn/adn_view.hpp"
#include "tdn/node_set.hpp"
#include "tdn/oracle_counter.hpp"
#include "tdn/sieve_adn.hpp"
#include "tdn/types.hpp"

namespace tdn {

// Influence maximization over a decaying network via a bank of addition-only
// maximizers, one per remaining-lifetime level 1..L. Level i is fed the
// sub-batch of edges with lifetime >= i, so by the time a level reaches the
// front of the bank it has accumulated exactly the edges still alive at the
// current step. Queries read the front level; after each step the front
// retires (its edges die with it), every level moves up one, and a fresh
// level joins at the back.
class BasicReduction {
 public:
  BasicReduction(int k, double epsilon, Lifetime max_lifetime,
                 SpreadOptions opts = {});

  // Processes one timestep: feeds the batch, answers from the head when
  // asked, then rotates. Every lifetime must lie in [1, max_lifetime].
  std::optional<Solution> step(std::span<const Interaction> batch,
                               bool want_solution, OracleCounter& counter);

  int k() const { return k_; }
  double epsilon() const { return eps_; }
  Lifetime max_lifetime() const { return max_lifetime_; }

  std::size_t instance_count() const { return instances_.size(); }
  const AdnView& view_of(std::size_t pos) const { return instances_[pos].view; }
  const AdnView& head_view() const { return instances_.front().view; }

  // Affected-set size seen by the head during the most recent step.
  std::size_t last_head_affected() const { return last_head_affected_; }

  // Edge multiset the head instance held when it retired at the end of the
  // most recent step, i.e. every interaction it was ever fed.
  const std::vector<Interaction>& last_head_edges() const {
    return last_head_edges_;
  }

 private:
  struct Instance {
    SieveAdn sieve;
    AdnView view;
  };

  int k_;
  double eps_;
  Lifetime max_lifetime_;
  SpreadOptions opts_;
  std::deque<Instance> instances_;
  std::size_t last_head_affected_ = 0;
  std::vector<Interaction> last_head_edges_;
};

}  // namespace tdn
