#pragma once

#include <cstdint>
#include <limits>

namespace tdn {

using NodeId = std::int32_t;
using Timestep = std::int64_t;
using Lifetime = std::int64_t;

// Sentinel for edges that never expire. An edge with this lifetime is alive
// from its arrival onward and never enters the expiry calendar.
inline constexpr Lifetime kInfiniteLifetime = std::numeric_limits<Lifetime>::max();

// One directed interaction u -> v observed at a timestep. An interaction with
// lifetime l is alive at every timestep t with arrival <= t < arrival + l.
struct Interaction {
  NodeId source = 0;
  NodeId target = 0;
  Timestep arrival = 0;
  Lifetime lifetime = kInfiniteLifetime;

  bool infinite() const { return lifetime == kInfiniteLifetime; }

  // Remaining lifetime at time t, assuming the edge is alive at t.
  Lifetime remaining_at(Timestep t) const {
    return infinite() ? kInfiniteLifetime : lifetime - (t - arrival);
  }

  bool alive_at(Timestep t) const {
    if (t < arrival) return false;
    return infinite() || t < arrival + lifetime;
  }

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

}  // namespace tdn
