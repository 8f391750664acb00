#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "tdn/experiment.hpp"

using tdn::Algorithm;
using tdn::ExperimentConfig;
using tdn::run_experiment;

namespace {

ExperimentConfig small_config(Algorithm algorithm) {
  ExperimentConfig cfg;
  cfg.algorithm = algorithm;
  cfg.k = 2;
  cfg.epsilon = 0.1;
  cfg.lifetime_spec = "geom:0.3";
  cfg.max_lifetime = 10;
  cfg.seed = 42;
  cfg.synthetic = tdn::SyntheticSpec{15, 4, 20, 2.0};
  return cfg;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("algorithm names round-trip") {
  for (Algorithm a :
       {Algorithm::kSieveAdn, Algorithm::kBasicReduction,
        Algorithm::kHistApprox, Algorithm::kHistApproxExact,
        Algorithm::kGreedy, Algorithm::kLazyGreedy, Algorithm::kRandom,
        Algorithm::kBruteForce}) {
    CHECK(tdn::parse_algorithm(tdn::algorithm_name(a)) == a);
  }
  CHECK_THROWS_AS(tdn::parse_algorithm("simulated-annealing"),
                  std::invalid_argument);
}

TEST_CASE("config text round-trips") {
  ExperimentConfig cfg = small_config(Algorithm::kHistApproxExact);
  cfg.query_every = 3;
  cfg.max_steps = 17;
  cfg.out_path = "/tmp/x.csv";
  cfg.strict = true;
  cfg.single = true;
  CHECK(ExperimentConfig::from_text(cfg.to_text()) == cfg);

  ExperimentConfig with_input;
  with_input.algorithm = Algorithm::kGreedy;
  with_input.input_path = "data/stream.txt";
  with_input.lifetime_spec = "column";
  with_input.max_lifetime = 50;
  with_input.synthetic.reset();
  CHECK(ExperimentConfig::from_text(with_input.to_text()) == with_input);

  CHECK_THROWS_AS(ExperimentConfig::from_text("nonsense"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_text("mystery=1"),
                  std::invalid_argument);
}

TEST_CASE("invalid configurations are rejected with explanations") {
  auto check_message = [](ExperimentConfig cfg, const char* needle) {
    try {
      cfg.validate();
      FAIL_CHECK("expected rejection mentioning: " << needle);
    } catch (const std::invalid_argument& err) {
      CHECK(std::string(err.what()).find(needle) != std::string::npos);
    }
  };

  auto sieve_finite = small_config(Algorithm::kSieveAdn);
  check_message(sieve_finite, "infinite");

  auto basic_unbounded = small_config(Algorithm::kBasicReduction);
  basic_unbounded.lifetime_spec = "geom:0.3";
  basic_unbounded.max_lifetime = 0;
  check_message(basic_unbounded, "finite maximum");

  auto hist_infinite = small_config(Algorithm::kHistApprox);
  hist_infinite.lifetime_spec = "infinite";
  check_message(hist_infinite, "finite lifetime");

  auto synthetic_column = small_config(Algorithm::kGreedy);
  synthetic_column.lifetime_spec = "column";
  check_message(synthetic_column, "column");

  auto both_sources = small_config(Algorithm::kGreedy);
  both_sources.input_path = "x.txt";
  check_message(both_sources, "exactly one stream source");

  auto bad_eps = small_config(Algorithm::kHistApprox);
  bad_eps.epsilon = 1.5;
  check_message(bad_eps, "epsilon");

  auto bad_spec = small_config(Algorithm::kGreedy);
  bad_spec.lifetime_spec = "weibull:2";
  check_message(bad_spec, "lifetime spec");
}

TEST_CASE("a run emits one record per queried step plus a summary") {
  TempFile file("tdn_experiment_smoke.csv");
  auto cfg = small_config(Algorithm::kHistApprox);
  cfg.query_every = 4;
  cfg.out_path = file.path;
  auto result = run_experiment(cfg);

  CHECK(result.summary.steps == 20);
  CHECK(result.summary.queries == 5);
  REQUIRE(result.records.size() == 5);
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    CHECK(r.timestep == static_cast<tdn::Timestep>(4 * (i + 1)));
    CHECK(r.algorithm == "hist-approx");
    CHECK(r.value >= 1);
    CHECK(r.total_calls == r.update_calls + r.query_calls);
    CHECK(r.active_instances >= 1);
    if (i > 0) {
      CHECK(r.total_calls >= result.records[i - 1].total_calls);
      CHECK(r.wall_micros >= result.records[i - 1].wall_micros);
    }
  }
  CHECK(result.summary.avg_value > 0.0);
  CHECK(result.summary.total_update_calls +
            result.summary.total_query_calls ==
        result.records.back().total_calls);

  std::ifstream in(file.path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(line == tdn::metrics_header());
  int rows = 0;
  std::string last;
  while (std::getline(in, line)) {
    if (!line.empty()) last = line;
    if (!line.empty() && line[0] != '#') ++rows;
  }
  CHECK(rows == 5);
  CHECK(last.find("# summary algorithm=hist-approx") == 0);
}

TEST_CASE("every algorithm answers on the same annotated stream") {
  for (Algorithm a :
       {Algorithm::kBasicReduction, Algorithm::kHistApprox,
        Algorithm::kHistApproxExact, Algorithm::kGreedy,
        Algorithm::kLazyGreedy, Algorithm::kRandom, Algorithm::kBruteForce}) {
    auto cfg = small_config(a);
    auto result = run_experiment(cfg);
    CHECK(result.summary.steps == 20);
    CHECK(result.summary.queries == 20);
    CHECK(result.summary.avg_value >= 1.0);
    // The stream is independent of the algorithm, so the environment columns
    // must agree across algorithms.
    CHECK(result.records[7].alive_edges > 0);
  }

  auto greedy_cfg = small_config(Algorithm::kGreedy);
  auto brute_cfg = small_config(Algorithm::kBruteForce);
  auto g = run_experiment(greedy_cfg);
  auto b = run_experiment(brute_cfg);
  REQUIRE(g.records.size() == b.records.size());
  for (std::size_t i = 0; i < g.records.size(); ++i) {
    CHECK(g.records[i].alive_edges == b.records[i].alive_edges);
    CHECK(g.records[i].alive_nodes == b.records[i].alive_nodes);
    CHECK(g.records[i].affected_size == b.records[i].affected_size);
    CHECK(g.records[i].value <= b.records[i].value);
  }
}

TEST_CASE("sieve-adn runs on addition-only streams") {
  auto cfg = small_config(Algorithm::kSieveAdn);
  cfg.lifetime_spec = "infinite";
  cfg.max_lifetime = 0;
  auto result = run_experiment(cfg);
  CHECK(result.summary.steps == 20);
  CHECK(result.records.back().active_instances == 1);
  // Addition only: alive edge count is the full emission count.
  CHECK(result.records.back().alive_edges == 80);
}

TEST_CASE("metrics replay identically apart from wall time") {
  TempFile first("tdn_replay_a.csv");
  TempFile second("tdn_replay_b.csv");
  auto cfg = small_config(Algorithm::kHistApproxExact);

  cfg.out_path = first.path;
  run_experiment(cfg);
  cfg.out_path = second.path;
  run_experiment(cfg);

  CHECK(tdn::metrics_equal_ignoring_wall(first.path, second.path));

  // Different seeds must actually change the file.
  TempFile third("tdn_replay_c.csv");
  cfg.seed = 43;
  cfg.out_path = third.path;
  run_experiment(cfg);
  CHECK_FALSE(tdn::metrics_equal_ignoring_wall(first.path, third.path));
}

TEST_CASE("a truncated or empty stream still produces a well-formed file") {
  TempFile file("tdn_zero_steps.csv");
  auto cfg = small_config(Algorithm::kGreedy);
  cfg.synthetic = tdn::SyntheticSpec{10, 3, 0, 1.0};
  cfg.out_path = file.path;
  auto result = run_experiment(cfg);
  CHECK(result.summary.steps == 0);
  CHECK(result.records.empty());

  std::ifstream in(file.path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == tdn::metrics_header());
  CHECK_FALSE(std::getline(in, line));

  auto truncated = small_config(Algorithm::kGreedy);
  truncated.max_steps = 6;
  auto short_run = run_experiment(truncated);
  CHECK(short_run.summary.steps == 6);
}

TEST_CASE("single mode serializes batches") {
  auto batched = small_config(Algorithm::kHistApprox);
  auto flat = batched;
  flat.single = true;
  auto a = run_experiment(batched);
  auto b = run_experiment(flat);
  CHECK(a.summary.steps == 20);
  CHECK(b.summary.steps == 80);
}
