#include "tdn/experiment.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tdn/baselines.hpp"
#include "tdn/basic_reduction.hpp"
#include "tdn/graph.hpp"
#include "tdn/hist_approx.hpp"
#include "tdn/node_set.hpp"
#include "tdn/oracle.hpp"
#include "tdn/rng.hpp"
#include "tdn/sieve_adn.hpp"
#include "tdn/stream.hpp"

namespace tdn {

namespace {

constexpr std::uint64_t kLifetimeSalt = 0x6c696665;   // "life"
constexpr std::uint64_t kSyntheticSalt = 0x73796e74;  // "synt"
constexpr std::uint64_t kRandomSalt = 0x72616e64;     // "rand"

std::string double_text(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, res.ptr};
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number for " + what + ": " + s);
  }
  return v;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer for " + what + ": " + s);
  }
  return v;
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kSieveAdn: return "sieve-adn";
    case Algorithm::kBasicReduction: return "basic-reduction";
    case Algorithm::kHistApprox: return "hist-approx";
    case Algorithm::kHistApproxExact: return "hist-approx-exact";
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kLazyGreedy: return "lazy-greedy";
    case Algorithm::kRandom: return "random";
    case Algorithm::kBruteForce: return "brute-force";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a :
       {Algorithm::kSieveAdn, Algorithm::kBasicReduction,
        Algorithm::kHistApprox, Algorithm::kHistApproxExact,
        Algorithm::kGreedy, Algorithm::kLazyGreedy, Algorithm::kRandom,
        Algorithm::kBruteForce}) {
    if (algorithm_name(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm: " + name);
}

LifetimePolicy ExperimentConfig::make_policy() const {
  Lifetime cap = max_lifetime > 0 ? max_lifetime : kInfiniteLifetime;
  if (lifetime_spec == "infinite") return LifetimePolicy::infinite();
  if (lifetime_spec == "column") return LifetimePolicy::from_input(cap);
  if (lifetime_spec.rfind("const:", 0) == 0) {
    return LifetimePolicy::constant(
        parse_int(lifetime_spec.substr(6), "const lifetime"));
  }
  if (lifetime_spec.rfind("geom:", 0) == 0) {
    return LifetimePolicy::geometric(
        parse_double(lifetime_spec.substr(5), "geometric p"), cap);
  }
  throw std::invalid_argument(
      "unknown lifetime spec: " + lifetime_spec +
      " (expected infinite, const:W, geom:p, or column)");
}

void ExperimentConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (query_every < 0) throw std::invalid_argument("query_every must be >= 0");
  if (max_steps < 0) throw std::invalid_argument("max_steps must be >= 0");
  if (max_lifetime < 0) {
    throw std::invalid_argument("max_lifetime must be >= 0");
  }
  if (input_path.empty() == !synthetic.has_value()) {
    throw std::invalid_argument(
        "exactly one stream source is required: --input or --synthetic");
  }
  if (synthetic && lifetime_spec == "column") {
    throw std::invalid_argument(
        "synthetic streams carry no lifetime column; pick another policy");
  }

  LifetimePolicy policy = make_policy();
  bool needs_epsilon =
      algorithm == Algorithm::kSieveAdn ||
      algorithm == Algorithm::kBasicReduction ||
      algorithm == Algorithm::kHistApprox ||
      algorithm == Algorithm::kHistApproxExact;
  if (needs_epsilon && !(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1)");
  }
  switch (algorithm) {
    case Algorithm::kSieveAdn:
      if (!policy.all_infinite()) {
        throw std::invalid_argument(
            "sieve-adn only supports addition-only streams; it requires "
            "--lifetime infinite");
      }
      break;
    case Algorithm::kBasicReduction:
      if (policy.max_lifetime() == kInfiniteLifetime) {
        throw std::invalid_argument(
            "basic-reduction keeps one instance per lifetime level and needs "
            "a finite maximum (use const:W, or geom:p/column with "
            "--max-lifetime)");
      }
      break;
    case Algorithm::kHistApprox:
    case Algorithm::kHistApproxExact:
      if (policy.all_infinite()) {
        throw std::invalid_argument(
            "hist-approx tracks expiring edges; use a finite lifetime policy");
      }
      break;
    default:
      break;
  }
}

std::string ExperimentConfig::to_text() const {
  std::ostringstream out;
  out << "algorithm=" << algorithm_name(algorithm) << '\n';
  out << "k=" << k << '\n';
  out << "epsilon=" << double_text(epsilon) << '\n';
  out << "lifetime=" << lifetime_spec << '\n';
  out << "max_lifetime=" << max_lifetime << '\n';
  out << "seed=" << seed << '\n';
  out << "query_every=" << query_every << '\n';
  out << "max_steps=" << max_steps << '\n';
  if (!input_path.empty()) out << "input=" << input_path << '\n';
  if (synthetic) {
    out << "synthetic=" << synthetic->num_nodes << ','
        << synthetic->edges_per_step << ',' << synthetic->num_steps << ','
        << double_text(synthetic->bias) << '\n';
  }
  if (!out_path.empty()) out << "out=" << out_path << '\n';
  out << "strict=" << (strict ? 1 : 0) << '\n';
  out << "single=" << (single ? 1 : 0) << '\n';
  return out.str();
}

ExperimentConfig ExperimentConfig::from_text(const std::string& text) {
  ExperimentConfig cfg;
  cfg.synthetic.reset();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line is not key=value: " + line);
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "algorithm") {
      cfg.algorithm = parse_algorithm(value);
    } else if (key == "k") {
      cfg.k = static_cast<int>(parse_int(value, key));
    } else if (key == "epsilon") {
      cfg.epsilon = parse_double(value, key);
    } else if (key == "lifetime") {
      cfg.lifetime_spec = value;
    } else if (key == "max_lifetime") {
      cfg.max_lifetime = parse_int(value, key);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(value, key));
    } else if (key == "query_every") {
      cfg.query_every = static_cast<int>(parse_int(value, key));
    } else if (key == "max_steps") {
      cfg.max_steps = parse_int(value, key);
    } else if (key == "input") {
      cfg.input_path = value;
    } else if (key == "out") {
      cfg.out_path = value;
    } else if (key == "strict") {
      cfg.strict = parse_int(value, key) != 0;
    } else if (key == "single") {
      cfg.single = parse_int(value, key) != 0;
    } else if (key == "synthetic") {
      std::string spaced = value;
      for (auto& c : spaced) {
        if (c == ',') c = ' ';
      }
      std::istringstream fields(spaced);
      SyntheticSpec spec;
      std::string bias_text;
      if (!(fields >> spec.num_nodes >> spec.edges_per_step >>
            spec.num_steps >> bias_text)) {
        throw std::invalid_argument("synthetic spec needs n,m,T,bias: " +
                                    value);
      }
      std::string extra;
      if (fields >> extra) {
        throw std::invalid_argument("synthetic spec has extra fields: " +
                                    value);
      }
      spec.bias = parse_double(bias_text, "synthetic bias");
      cfg.synthetic = spec;
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  return cfg;
}

std::string metrics_header() {
  return "timestep,algorithm,solution,value,update_calls,query_calls,"
         "total_calls,alive_edges,alive_nodes,active_instances,affected_size,"
         "wall_micros";
}

std::string metrics_row(const MetricsRecord& r) {
  std::ostringstream out;
  out << r.timestep << ',' << r.algorithm << ',';
  for (std::size_t i = 0; i < r.solution.size(); ++i) {
    if (i > 0) out << ';';
    out << r.solution[i];
  }
  out << ',' << r.value << ',' << r.update_calls << ',' << r.query_calls
      << ',' << r.total_calls << ',' << r.alive_edges << ',' << r.alive_nodes
      << ',' << r.active_instances << ',' << r.affected_size << ','
      << r.wall_micros;
  return out.str();
}

namespace {

std::vector<RawBatch> single_interaction_batches(std::vector<RawBatch> raw) {
  std::vector<RawBatch> flat;
  for (auto& batch : raw) {
    for (auto& item : batch.items) {
      flat.push_back({batch.original_time, {item}});
    }
  }
  return flat;
}

void write_metrics_file(const ExperimentConfig& cfg,
                        const ExperimentResult& result,
                        const std::string& name) {
  std::ofstream out(cfg.out_path);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + cfg.out_path);
  }
  out << metrics_header() << '\n';
  for (const auto& record : result.records) out << metrics_row(record) << '\n';
  const auto& s = result.summary;
  if (s.steps > 0) {
    out << "# summary algorithm=" << name << " steps=" << s.steps
        << " queries=" << s.queries << " avg_value=" << double_text(s.avg_value)
        << " avg_calls_per_step=" << double_text(s.avg_calls_per_step)
        << " total_update_calls=" << s.total_update_calls
        << " total_query_calls=" << s.total_query_calls << '\n';
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  LifetimePolicy policy = config.make_policy();

  std::vector<RawBatch> raw;
  if (!config.input_path.empty()) {
    raw = parse_stream_file(config.input_path, ParseOptions{config.strict});
  } else {
    const auto& spec = *config.synthetic;
    raw = generate_synthetic(spec.num_nodes, spec.edges_per_step,
                             spec.num_steps, spec.bias,
                             salted_seed(config.seed, kSyntheticSalt));
  }
  if (config.single) raw = single_interaction_batches(std::move(raw));
  if (config.max_steps > 0 &&
      raw.size() > static_cast<std::size_t>(config.max_steps)) {
    raw.resize(static_cast<std::size_t>(config.max_steps));
  }
  auto num_steps = static_cast<std::int64_t>(raw.size());
  int cadence = config.query_every > 0 ? config.query_every
                                       : (num_steps <= 10000 ? 1 : 10);

  // Lifetimes are fixed before the algorithm runs; the annotated stream is a
  // pure function of the config minus its algorithm field.
  LifetimeAssigner assigner(policy, salted_seed(config.seed, kLifetimeSalt));
  std::vector<std::vector<Interaction>> batches(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto t = static_cast<Timestep>(i + 1);
    for (const auto& item : raw[i].items) {
      auto lifetime = assigner.try_assign(item.lifetime);
      if (!lifetime) {
        if (config.strict) {
          throw std::runtime_error(
              "line " + std::to_string(item.line_no) +
              ": lifetime column is missing, non-positive, or above the cap");
        }
        continue;
      }
      batches[i].push_back({item.source, item.target, t, *lifetime});
    }
  }

  std::unique_ptr<SieveAdn> sieve;
  std::unique_ptr<BasicReduction> basic;
  std::unique_ptr<HistApprox> hist;
  switch (config.algorithm) {
    case Algorithm::kSieveAdn:
      sieve = std::make_unique<SieveAdn>(config.k, config.epsilon);
      break;
    case Algorithm::kBasicReduction:
      basic = std::make_unique<BasicReduction>(config.k, config.epsilon,
                                               policy.max_lifetime());
      break;
    case Algorithm::kHistApprox:
    case Algorithm::kHistApproxExact:
      hist = std::make_unique<HistApprox>(
          config.k, config.epsilon,
          config.algorithm == Algorithm::kHistApproxExact);
      break;
    default:
      break;
  }
  std::mt19937_64 random_rng(salted_seed(config.seed, kRandomSalt));

  std::string name = algorithm_name(config.algorithm);
  TdnGraph graph(1);
  OracleCounter counter;
  ExperimentResult result;
  double value_sum = 0.0;
  std::int64_t wall_total = 0;

  for (std::int64_t t = 1; t <= num_steps; ++t) {
    const auto& batch = batches[static_cast<std::size_t>(t - 1)];
    graph.insert_batch(batch);
    NodeSet affected = affected_nodes(graph, batch);
    bool is_query = t % cadence == 0;

    std::optional<Solution> solution;
    auto started = std::chrono::steady_clock::now();
    switch (config.algorithm) {
      case Algorithm::kSieveAdn:
        sieve->process_batch(graph, affected, counter);
        if (is_query) solution = sieve->current_solution(graph, counter);
        break;
      case Algorithm::kBasicReduction:
        solution = basic->step(batch, is_query, counter);
        break;
      case Algorithm::kHistApprox:
      case Algorithm::kHistApproxExact:
        solution = hist->step(graph, batch, is_query, counter);
        break;
      case Algorithm::kGreedy:
        if (is_query) solution = greedy(graph, config.k, counter);
        break;
      case Algorithm::kLazyGreedy:
        if (is_query) solution = lazy_greedy(graph, config.k, counter);
        break;
      case Algorithm::kRandom:
        if (is_query) {
          solution = random_solution(graph, config.k, random_rng, counter);
        }
        break;
      case Algorithm::kBruteForce:
        if (is_query) solution = brute_force_opt(graph, config.k, counter);
        break;
    }
    wall_total += std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();

    if (is_query) {
      std::size_t instances = 0;
      if (sieve) instances = 1;
      if (basic) instances = basic->instance_count();
      if (hist) instances = hist->instance_count();
      MetricsRecord record;
      record.timestep = t;
      record.algorithm = name;
      record.solution = solution->nodes.ids();
      record.value = solution->value;
      record.update_calls = counter.update_calls();
      record.query_calls = counter.query_calls();
      record.total_calls = counter.total();
      record.alive_edges = graph.num_alive_edges();
      record.alive_nodes = graph.num_alive_nodes();
      record.active_instances = instances;
      record.affected_size = affected.size();
      record.wall_micros = wall_total;
      value_sum += static_cast<double>(record.value);
      result.records.push_back(std::move(record));
    }
    graph.advance_time();
  }

  auto queries = static_cast<std::int64_t>(result.records.size());
  result.summary.steps = num_steps;
  result.summary.queries = queries;
  result.summary.avg_value =
      queries > 0 ? value_sum / static_cast<double>(queries) : 0.0;
  result.summary.avg_calls_per_step =
      num_steps > 0
          ? static_cast<double>(counter.total()) /
                static_cast<double>(num_steps)
          : 0.0;
  result.summary.total_update_calls = counter.update_calls();
  result.summary.total_query_calls = counter.query_calls();

  if (!config.out_path.empty()) write_metrics_file(config, result, name);
  return result;
}

bool metrics_equal_ignoring_wall(const std::string& path_a,
                                 const std::string& path_b) {
  std::ifstream a(path_a), b(path_b);
  if (!a) throw std::runtime_error("cannot open metrics file: " + path_a);
  if (!b) throw std::runtime_error("cannot open metrics file: " + path_b);

  auto strip_wall = [](const std::string& line) {
    if (line.empty() || line[0] == '#' || line == metrics_header()) {
      return line;
    }
    auto comma = line.rfind(',');
    return comma == std::string::npos ? line : line.substr(0, comma);
  };

  std::string la, lb;
  for (;;) {
    bool more_a = static_cast<bool>(std::getline(a, la));
    bool more_b = static_cast<bool>(std::getline(b, lb));
    if (more_a != more_b) return false;
    if (!more_a) return true;
    if (strip_wall(la) != strip_wall(lb)) return false;
  }
}

}  // namespace tdn
