#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tdn/basic_reduction.hpp"
#include "tdn/graph.hpp"
#include "tdn/hist_approx.hpp"
#include "tdn/lifetime.hpp"
#include "tdn/oracle.hpp"
#include "tdn/rng.hpp"
#include "tdn/sieve_adn.hpp"
#include "tdn/stream.hpp"

namespace {

// One lifetime-annotated synthetic stream per (n, L) shape, shared by the
// benchmarks so differences come from the algorithms, not the input.
std::vector<std::vector<tdn::Interaction>> annotated_stream(
    int num_nodes, int edges_per_step, int num_steps, tdn::Lifetime cap,
    std::uint64_t seed) {
  auto raw = tdn::generate_synthetic(num_nodes, edges_per_step, num_steps,
                                     2.0, tdn::salted_seed(seed, 1));
  tdn::LifetimeAssigner assigner(
      tdn::LifetimePolicy::geometric(2.0 / static_cast<double>(cap), cap),
      tdn::salted_seed(seed, 2));
  std::vector<std::vector<tdn::Interaction>> batches;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::vector<tdn::Interaction> batch;
    for (const auto& item : raw[i].items) {
      batch.push_back({item.source, item.target,
                       static_cast<tdn::Timestep>(i + 1),
                       *assigner.try_assign(item.lifetime)});
    }
    batches.push_back(std::move(batch));
  }
  return batches;
}

void BM_Spread(benchmark::State& state) {
  auto n = static_cast<int>(state.range(0));
  auto batches = annotated_stream(n, 8, 40, 1000000, 11);
  tdn::TdnGraph g(1);
  for (std::size_t i = 0; i < batches.size(); ++i) {
    if (i > 0) g.advance_time();
    g.insert_batch(batches[i]);
  }
  auto seeds = g.alive_node_ids();
  seeds.resize(std::min<std::size_t>(seeds.size(), 10));
  tdn::NodeSet seed_set;
  for (auto v : seeds) seed_set.insert(v);

  tdn::OracleCounter counter;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdn::spread(g, seed_set, counter));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_Spread)->Arg(100)->Arg(400);

void BM_SieveProcessBatch(benchmark::State& state) {
  auto n = static_cast<int>(state.range(0));
  auto raw = tdn::generate_synthetic(n, 8, 50, 2.0, 13);
  for (auto _ : state) {
    state.PauseTiming();
    tdn::TdnGraph g(1);
    tdn::SieveAdn sieve(10, 0.2);
    tdn::OracleCounter counter;
    state.ResumeTiming();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (i > 0) g.advance_time();
      std::vector<tdn::Interaction> batch;
      for (const auto& item : raw[i].items) {
        batch.push_back({item.source, item.target,
                         static_cast<tdn::Timestep>(i + 1),
                         tdn::kInfiniteLifetime});
      }
      g.insert_batch(batch);
      sieve.process_batch(g, tdn::affected_nodes(g, batch), counter);
    }
    benchmark::DoNotOptimize(sieve.delta());
  }
}
BENCHMARK(BM_SieveProcessBatch)->Arg(100)->Arg(300);

// The head-to-head the library exists for: per-step cost of the histogram
// versus the full instance ring on the same decaying stream.
void BM_ReductionStep(benchmark::State& state) {
  bool use_hist = state.range(0) == 1;
  const tdn::Lifetime kMaxLifetime = 40;
  auto batches = annotated_stream(120, 6, 60, kMaxLifetime, 17);

  for (auto _ : state) {
    state.PauseTiming();
    tdn::TdnGraph g(1);
    tdn::BasicReduction basic(5, 0.2, kMaxLifetime);
    tdn::HistApprox hist(5, 0.2, false);
    tdn::OracleCounter counter;
    state.ResumeTiming();
    for (std::size_t i = 0; i < batches.size(); ++i) {
      if (i > 0) g.advance_time();
      g.insert_batch(batches[i]);
      if (use_hist) {
        benchmark::DoNotOptimize(hist.step(g, batches[i], true, counter));
      } else {
        benchmark::DoNotOptimize(basic.step(batches[i], true, counter));
      }
    }
  }
  state.SetLabel(use_hist ? "hist-approx" : "basic-reduction");
}
BENCHMARK(BM_ReductionStep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
