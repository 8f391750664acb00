#include "tdn/lifetime.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tdn/rng.hpp"

namespace tdn {

LifetimePolicy LifetimePolicy::infinite() {
  return {Kind::kInfinite, kInfiniteLifetime, 0.0};
}

LifetimePolicy LifetimePolicy::constant(Lifetime w) {
  if (w < 1) throw std::invalid_argument("constant lifetime must be >= 1");
  return {Kind::kConstant, w, 0.0};
}

LifetimePolicy LifetimePolicy::geometric(double p, Lifetime cap) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("geometric lifetime needs p in (0, 1]");
  }
  if (cap < 1) throw std::invalid_argument("lifetime cap must be >= 1");
  return {Kind::kGeometric, cap, p};
}

LifetimePolicy LifetimePolicy::from_input(Lifetime cap) {
  if (cap < 1) throw std::invalid_argument("lifetime cap must be >= 1");
  return {Kind::kFromInput, cap, 0.0};
}

Lifetime LifetimePolicy::max_lifetime() const { return value_; }

std::string LifetimePolicy::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::kInfinite:
      out << "infinite";
      break;
    case Kind::kConstant:
      out << "const:" << value_;
      break;
    case Kind::kGeometric:
      out << "geom:" << p_;
      if (value_ != kInfiniteLifetime) out << ",max:" << value_;
      break;
    case Kind::kFromInput:
      out << "column";
      if (value_ != kInfiniteLifetime) out << ",max:" << value_;
      break;
  }
  return out.str();
}

std::optional<Lifetime> LifetimeAssigner::try_assign(
    std::optional<Lifetime> column) {
  switch (policy_.kind()) {
    case LifetimePolicy::Kind::kInfinite:
      return kInfiniteLifetime;
    case LifetimePolicy::Kind::kConstant:
      return policy_.max_lifetime();
    case LifetimePolicy::Kind::kGeometric:
      return draw_geometric();
    case LifetimePolicy::Kind::kFromInput:
      if (!column || *column < 1 || *column > policy_.max_lifetime()) {
        return std::nullopt;
      }
      return *column;
  }
  return std::nullopt;
}

Lifetime LifetimeAssigner::draw_geometric() {
  double p = policy_.success_probability();
  if (p == 1.0) return 1;
  Lifetime cap = policy_.max_lifetime();

  // Inversion on the truncated geometric: u uniform in [0,1) mapped through
  // the cdf restricted to {1..cap}.
  double u = unit_draw(rng_);
  double q = 1.0 - p;
  double tail = cap == kInfiniteLifetime ? 0.0
                                         : std::pow(q, static_cast<double>(cap));
  double x = std::log1p(-u * (1.0 - tail)) / std::log(q);
  auto l = static_cast<Lifetime>(1 + std::floor(x));
  return std::clamp<Lifetime>(l, 1, cap);
}

}  // namespace tdn
