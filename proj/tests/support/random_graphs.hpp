#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tdn/rng.hpp"
#include "tdn/types.hpp"

// Throwaway random streams for property tests: each batch holds
// edges_per_batch uniform (u, v) pairs over nodes 1..n, u != v.
namespace fixture {

inline std::vector<std::vector<tdn::Interaction>> random_batches(
    int n, int edges_per_batch, int num_batches, tdn::Lifetime lifetime,
    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<tdn::Interaction>> out;
  for (int t = 1; t <= num_batches; ++t) {
    std::vector<tdn::Interaction> batch;
    for (int j = 0; j < edges_per_batch; ++j) {
      auto u = static_cast<tdn::NodeId>(1 + tdn::uniform_below(rng, n));
      auto v = static_cast<tdn::NodeId>(1 + tdn::uniform_below(rng, n - 1));
      if (v >= u) ++v;
      batch.push_back({u, v, t, lifetime});
    }
    out.push_back(std::move(batch));
  }
  return out;
}

}  // namespace fixture
