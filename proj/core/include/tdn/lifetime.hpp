#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "tdn/types.hpp"

namespace tdn {

// How interaction lifetimes are chosen at ingest: every edge immortal, a
// fixed window, a truncated geometric draw, or a value carried by the input
// record itself.
class LifetimePolicy {
 public:
  enum class Kind { kInfinite, kConstant, kGeometric, kFromInput };

  static LifetimePolicy infinite();
  static LifetimePolicy constant(Lifetime w);
  static LifetimePolicy geometric(double p, Lifetime cap);
  static LifetimePolicy from_input(Lifetime cap);

  Kind kind() const { return kind_; }
  bool needs_input_column() const { return kind_ == Kind::kFromInput; }
  bool all_infinite() const { return kind_ == Kind::kInfinite; }

  // Largest lifetime the policy can produce.
  Lifetime max_lifetime() const;

  double success_probability() const { return p_; }

  std::string describe() const;

 private:
  LifetimePolicy(Kind kind, Lifetime value, double p)
      : kind_(kind), value_(value), p_(p) {}

  Kind kind_;
  Lifetime value_;  // constant window, or cap for geometric / from-input
  double p_;
};

// Stamps lifetimes onto a stream of interactions. Owns its generator, so
// repeated runs with one seed draw identical sequences.
class LifetimeAssigner {
 public:
  LifetimeAssigner(LifetimePolicy policy, std::uint64_t seed)
      : policy_(policy), rng_(seed) {}

  const LifetimePolicy& policy() const { return policy_; }

  // Lifetime for the next record given its optional input column, or nullopt
  // when the record is unusable under the policy (missing or out-of-range
  // column).
  std::optional<Lifetime> try_assign(std::optional<Lifetime> column);

 private:
  Lifetime draw_geometric();

  LifetimePolicy policy_;
  std::mt19937_64 rng_;
};

}  // namespace tdn
