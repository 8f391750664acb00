#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdn/types.hpp"

namespace tdn {

// One input line before lifetime assignment. The timestamp is the raw value
// from the file; batch grouping happens in parse_stream.
struct RawInteraction {
  NodeId source = 0;
  NodeId target = 0;
  std::int64_t timestamp = 0;
  std::optional<Lifetime> lifetime;
  int line_no = 0;
};

struct RawBatch {
  std::int64_t original_time = 0;
  std::vector<RawInteraction> items;
};

struct ParseOptions {
  // Strict mode turns every skippable defect (malformed line, self-loop,
  // out-of-order timestamp) into an error naming the offending line.
  bool strict = false;
};

struct ParseReport {
  std::vector<std::string> warnings;
  std::size_t parsed = 0;
  std::size_t skipped = 0;
};

// Reads "source target timestamp [lifetime]" lines (comma or whitespace
// delimited, '#' starts a comment) and groups them into batches, one per
// distinct timestamp, ordered by timestamp. Throws std::runtime_error on
// unreadable input, an interaction-free stream, or any strict-mode defect.
std::vector<RawBatch> parse_stream(std::istream& in, const ParseOptions& opts,
                                   ParseReport* report = nullptr);
std::vector<RawBatch> parse_stream_file(const std::string& path,
                                        const ParseOptions& opts,
                                        ParseReport* report = nullptr);

// Deterministic synthetic stream: every step emits edges_per_step edges whose
// sources are drawn with preferential weighting (each emission adds `bias` to
// the source's weight) so a few nodes accumulate outsized influence; targets
// are uniform among the other nodes. Node ids are 1..num_nodes; no lifetime
// column.
std::vector<RawBatch> generate_synthetic(int num_nodes, int edges_per_step,
                                         int num_steps, double bias,
                                         std::uint64_t seed);

}  // namespace tdn
