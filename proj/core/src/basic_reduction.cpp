#include "tdn/basic_reduction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "tdn/oracle.hpp"

namespace tdn {

namespace {
constexpr Lifetime kMaxLevels = 100'000;
}

BasicReduction::BasicReduction(int k, double epsilon, Lifetime max_lifetime,
                               SpreadOptions opts)
    : k_(k), eps_(epsilon), max_lifetime_(max_lifetime), opts_(opts) {
  if (max_lifetime < 1 || max_lifetime > kMaxLevels) {
    // One maximizer per level: an unbounded or huge cap is impractical here.
    throw std::invalid_argument(
        "max lifetime must lie in [1, " + std::to_string(kMaxLevels) + "]");
  }
  for (Lifetime i = 0; i < max_lifetime; ++i) {
    instances_.push_back({SieveAdn(k_, eps_, opts_), AdnView{}});
  }
}

std::optional<Solution> BasicReduction::step(std::span<const Interaction> batch,
                                             bool want_solution,
                                             OracleCounter& counter) {
  for (const Interaction& e : batch) {
    if (e.lifetime < 1 || e.lifetime > max_lifetime_) {
      throw std::invalid_argument("interaction lifetime " +
                                  std::to_string(e.lifetime) +
                                  " outside [1, " +
                                  std::to_string(max_lifetime_) + "]");
    }
  }

  last_head_affected_ = 0;
  std::vector<Interaction> sub(batch.begin(), batch.end());
  for (std::size_t pos = 0; pos < instances_.size(); ++pos) {
    // Level pos+1 wants lifetime >= pos+1; the filter tightens as we go, so
    // one shrinking vector serves every level.
    auto level = static_cast<Lifetime>(pos) + 1;
    std::erase_if(sub, [&](const Interaction& e) { return e.lifetime < level; });
    if (sub.empty()) break;

    Instance& inst = instances_[pos];
    inst.view.add_batch(sub);
    NodeSet affected = affected_nodes(inst.view, sub, opts_);
    if (pos == 0) last_head_affected_ = affected.size();
    inst.sieve.process_batch(inst.view, affected, counter, CallKind::kUpdate);
  }

  std::optional<Solution> out;
  if (want_solution) {
    out = instances_.front().sieve.current_solution(instances_.front().view,
                                                    counter, CallKind::kQuery);
  }

  std::span<const Interaction> head_edges = instances_.front().view.edges();
  last_head_edges_.assign(head_edges.begin(), head_edges.end());

  instances_.pop_front();
  instances_.push_back({SieveAdn(k_, eps_, opts_), AdnView{}});
  return out;
}

}  // namespace tdn
