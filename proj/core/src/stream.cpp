#include "tdn/stream.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tdn/rng.hpp"

namespace tdn {

namespace {

struct LineError {
  std::string reason;
};

// Parses one data line into fields; throws LineError on any defect.
RawInteraction parse_line(const std::string& line, int line_no) {
  std::string spaced = line;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);

  std::int64_t fields[4];
  int count = 0;
  while (count < 4 && (in >> fields[count])) ++count;

  std::string trailing;
  if (in >> trailing) throw LineError{"too many fields"};
  if (count < 3) throw LineError{"expected source,target,timestamp[,lifetime]"};

  auto as_node = [](std::int64_t v) {
    if (v < std::numeric_limits<NodeId>::min() ||
        v > std::numeric_limits<NodeId>::max()) {
      throw LineError{"node id out of range"};
    }
    return static_cast<NodeId>(v);
  };

  RawInteraction raw;
  raw.source = as_node(fields[0]);
  raw.target = as_node(fields[1]);
  raw.timestamp = fields[2];
  if (count == 4) raw.lifetime = fields[3];
  raw.line_no = line_no;
  if (raw.source == raw.target) throw LineError{"self-loop"};
  return raw;
}

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

std::vector<RawBatch> parse_stream(std::istream& in, const ParseOptions& opts,
                                   ParseReport* report) {
  std::vector<RawInteraction> rows;
  ParseReport local;
  ParseReport& rep = report ? *report : local;

  std::string line;
  int line_no = 0;
  bool seen_any = false;
  std::int64_t last_time = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    try {
      RawInteraction raw = parse_line(line, line_no);
      if (opts.strict && seen_any && raw.timestamp < last_time) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": out-of-order timestamp " +
                                 std::to_string(raw.timestamp));
      }
      seen_any = true;
      last_time = std::max(last_time, raw.timestamp);
      rows.push_back(raw);
      ++rep.parsed;
    } catch (const LineError& err) {
      if (opts.strict) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                                 err.reason);
      }
      rep.warnings.push_back("line " + std::to_string(line_no) + ": " +
                             err.reason + " (skipped)");
      ++rep.skipped;
    }
  }
  if (in.bad()) throw std::runtime_error("read failure on input stream");
  if (rows.empty()) throw std::runtime_error("stream contains no interactions");

  // Distinct timestamps become consecutive batches; within a batch the file
  // order is preserved.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const RawInteraction& a, const RawInteraction& b) {
                     return a.timestamp < b.timestamp;
                   });
  std::vector<RawBatch> batches;
  for (const auto& row : rows) {
    if (batches.empty() || batches.back().original_time != row.timestamp) {
      batches.push_back({row.timestamp, {}});
    }
    batches.back().items.push_back(row);
  }
  return batches;
}

std::vector<RawBatch> parse_stream_file(const std::string& path,
                                        const ParseOptions& opts,
                                        ParseReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return parse_stream(in, opts, report);
}

std::vector<RawBatch> generate_synthetic(int num_nodes, int edges_per_step,
                                         int num_steps, double bias,
                                         std::uint64_t seed) {
  if (num_nodes < 2) {
    throw std::invalid_argument("synthetic stream needs at least 2 nodes");
  }
  if (edges_per_step < 1) {
    throw std::invalid_argument("synthetic stream needs edges_per_step >= 1");
  }
  if (num_steps < 0) throw std::invalid_argument("num_steps must be >= 0");
  if (!(bias >= 0.0)) throw std::invalid_argument("bias must be >= 0");

  std::mt19937_64 rng(seed);
  std::vector<double> weight(static_cast<std::size_t>(num_nodes), 1.0);
  std::vector<double> cumulative(weight.size());

  std::vector<RawBatch> batches;
  batches.reserve(static_cast<std::size_t>(num_steps));
  for (int t = 1; t <= num_steps; ++t) {
    RawBatch batch;
    batch.original_time = t;
    batch.items.reserve(static_cast<std::size_t>(edges_per_step));
    for (int j = 0; j < edges_per_step; ++j) {
      double total = 0.0;
      for (std::size_t i = 0; i < weight.size(); ++i) {
        total += weight[i];
        cumulative[i] = total;
      }
      double x = unit_draw(rng) * total;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
      if (it == cumulative.end()) --it;
      auto src = static_cast<NodeId>(1 + (it - cumulative.begin()));

      auto tgt = static_cast<NodeId>(
          1 + uniform_below(rng, static_cast<std::uint64_t>(num_nodes - 1)));
      if (tgt >= src) ++tgt;

      batch.items.push_back({src, tgt, t, std::nullopt, 0});
      weight[static_cast<std::size_t>(src - 1)] += bias;
    }
    batches.push_back(std::move(batch));
  }
  return batches;
}

}  // namespace tdn
