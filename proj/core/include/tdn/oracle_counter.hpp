#pragma once

#include <atomic>
#include <cstdint>

namespace tdn {

// Whether an influence evaluation was spent maintaining sketches (update) or
// extracting an answer (query). Reported separately in metrics.
enum class CallKind { kUpdate, kQuery };

// Monotone counter of influence-spread evaluations. Every spread or
// marginal-gain evaluation ticks exactly once; all algorithm cost comparisons
// are in units of these ticks.
class OracleCounter {
 public:
  void tick(CallKind kind) {
    auto& c = kind == CallKind::kUpdate ? update_ : query_;
    c.fetch_add(1, std::memory_order_relaxed);
  }

  std::uint64_t update_calls() const {
    return update_.load(std::memory_order_relaxed);
  }
  std::uint64_t query_calls() const {
    return query_.load(std::memory_order_relaxed);
  }
  std::uint64_t total() const { return update_calls() + query_calls(); }

 private:
  std::atomic<std::uint64_t> update_{0};
  std::atomic<std::uint64_t> query_{0};
};

}  // namespace tdn
