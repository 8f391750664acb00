#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdn/lifetime.hpp"
#include "tdn/types.hpp"

namespace tdn {

enum class Algorithm {
  kSieveAdn,
  kBasicReduction,
  kHistApprox,
  kHistApproxExact,
  kGreedy,
  kLazyGreedy,
  kRandom,
  kBruteForce,
};

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct SyntheticSpec {
  int num_nodes = 0;
  int edges_per_step = 0;
  int num_steps = 0;
  double bias = 0.0;

  friend bool operator==(const SyntheticSpec&, const SyntheticSpec&) = default;
};

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kHistApprox;
  int k = 10;
  double epsilon = 0.2;
  // infinite | const:W | geom:p | column; geom and column are capped by
  // max_lifetime when it is nonzero.
  std::string lifetime_spec = "infinite";
  Lifetime max_lifetime = 0;
  std::uint64_t seed = 1;
  int query_every = 0;       // 0 = every step up to 10^4 steps, then every 10
  std::int64_t max_steps = 0;  // 0 = whole stream
  std::string input_path;
  std::optional<SyntheticSpec> synthetic;
  std::string out_path;
  bool strict = false;
  bool single = false;  // split batches into one interaction per timestep

  LifetimePolicy make_policy() const;
  void validate() const;
  std::string to_text() const;
  static ExperimentConfig from_text(const std::string& text);

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

struct MetricsRecord {
  Timestep timestep = 0;
  std::string algorithm;
  std::vector<NodeId> solution;
  std::int64_t value = 0;
  std::uint64_t update_calls = 0;
  std::uint64_t query_calls = 0;
  std::uint64_t total_calls = 0;
  std::size_t alive_edges = 0;
  std::size_t alive_nodes = 0;
  std::size_t active_instances = 0;
  std::size_t affected_size = 0;
  std::int64_t wall_micros = 0;  // cumulative time inside the algorithm
};

std::string metrics_header();
std::string metrics_row(const MetricsRecord& r);

struct ExperimentSummary {
  std::int64_t steps = 0;
  std::int64_t queries = 0;
  double avg_value = 0.0;
  double avg_calls_per_step = 0.0;
  std::uint64_t total_update_calls = 0;
  std::uint64_t total_query_calls = 0;
};

struct ExperimentResult {
  std::vector<MetricsRecord> records;
  ExperimentSummary summary;
};

// Runs one algorithm over one stream: per timestep the batch is lifetime
// annotated, inserted, fed to the algorithm, and recorded at the query
// cadence before the clock advances. Writes a metrics file when out_path is
// set. Lifetime assignment and stream generation derive their seeds from
// config.seed independently of the algorithm choice, so every algorithm
// replays the identical annotated stream.
ExperimentResult run_experiment(const ExperimentConfig& config);

// True when the two metrics files match on every line, ignoring the
// wall-clock column of data rows.
bool metrics_equal_ignoring_wall(const std::string& path_a,
                                 const std::string& path_b);

}  // namespace tdn
