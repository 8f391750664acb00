#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "random_graphs.hpp"
#include "sample_stream.hpp"
#include "tdn/basic_reduction.hpp"
#include "tdn/graph.hpp"
#include "tdn/oracle.hpp"

using tdn::BasicReduction;
using tdn::Interaction;
using tdn::kInfiniteLifetime;
using tdn::OracleCounter;
using tdn::TdnGraph;

namespace {

std::vector<Interaction> sorted_edges(std::vector<Interaction> edges) {
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.arrival, a.source, a.target, a.lifetime) <
           std::tie(b.arrival, b.source, b.target, b.lifetime);
  });
  return edges;
}

std::vector<Interaction> view_edges(const tdn::AdnView& v) {
  return sorted_edges({v.edges().begin(), v.edges().end()});
}

}  // namespace

TEST_CASE("levels accumulate exactly the sub-batches at their lifetime") {
  BasicReduction red(2, 0.1, 3);
  OracleCounter c;

  auto b1 = fixture::seven_node_batch1(1);
  auto sol1 = red.step(b1, true, c);
  REQUIRE(sol1.has_value());
  CHECK(sol1->value >= 3);  // optimum is 6; guarantee is (1/2 - 0.1)
  CHECK(sol1->value <= 6);

  // After rotation the surviving levels hold the lifetime >= 2 and >= 3
  // sub-batches of step 1.
  CHECK(view_edges(red.view_of(0)) ==
        sorted_edges({{1, 4, 1, 2}, {5, 3, 1, 3}}));
  CHECK(view_edges(red.view_of(1)) == sorted_edges({{5, 3, 1, 3}}));
  CHECK(red.view_of(2).num_edges() == 0);
  CHECK(red.instance_count() == 3);

  auto b2 = fixture::seven_node_batch2(2);
  auto sol2 = red.step(b2, true, c);
  REQUIRE(sol2.has_value());
  CHECK(sol2->value >= 3);  // optimum at step 2 is 6
  CHECK(sol2->value <= 6);

  CHECK(view_edges(red.view_of(0)) ==
        sorted_edges({{5, 3, 1, 3}, {7, 4, 2, 2}, {7, 6, 2, 3}}));
  CHECK(view_edges(red.view_of(1)) == sorted_edges({{7, 6, 2, 3}}));
  CHECK(red.view_of(2).num_edges() == 0);
  CHECK(red.instance_count() == 3);
}

TEST_CASE("every level mirrors the alive edges that will outlive it") {
  const tdn::Lifetime L = 4;
  TdnGraph g(1);
  BasicReduction red(2, 0.1, L);
  OracleCounter c;

  auto batches = fixture::random_batches(10, 6, 8, 1, 31);
  // Respread lifetimes 1..L deterministically.
  int spin = 0;
  for (auto& batch : batches) {
    for (auto& e : batch) e.lifetime = 1 + (spin++ % L);
  }

  for (std::size_t t = 0; t < batches.size(); ++t) {
    if (t > 0) g.advance_time();
    g.insert_batch(batches[t]);
    auto sol = red.step(batches[t], true, c);
    REQUIRE(sol.has_value());

    // Post-rotation level p holds exactly the alive edges with remaining
    // lifetime >= p + 2; the freshly appended level is empty.
    for (std::size_t p = 0; p + 1 < red.instance_count(); ++p) {
      auto expect = g.edges_with_remaining_lifetime_in(
          static_cast<tdn::Lifetime>(p) + 2, kInfiniteLifetime);
      CHECK(view_edges(red.view_of(p)) == sorted_edges(std::move(expect)));
    }
    CHECK(red.view_of(red.instance_count() - 1).num_edges() == 0);

    auto opt = tdn::brute_force_opt(g, 2, c);
    CHECK(static_cast<double>(sol->value) >=
          (0.5 - 0.1) * static_cast<double>(opt.value));
    CHECK(sol->value <= opt.value);
  }
}

TEST_CASE("construction and feeding reject invalid lifetimes") {
  CHECK_THROWS_AS(BasicReduction(2, 0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(BasicReduction(2, 0.1, kInfiniteLifetime),
                  std::invalid_argument);
  CHECK_THROWS_AS(BasicReduction(2, 0.1, 100'001), std::invalid_argument);

  BasicReduction red(2, 0.1, 3);
  OracleCounter c;
  std::vector<Interaction> too_long{{1, 2, 1, 4}};
  std::vector<Interaction> infinite{{1, 2, 1, kInfiniteLifetime}};
  std::vector<Interaction> zero{{1, 2, 1, 0}};
  CHECK_THROWS_AS(red.step(too_long, false, c), std::invalid_argument);
  CHECK_THROWS_AS(red.step(infinite, false, c), std::invalid_argument);
  CHECK_THROWS_AS(red.step(zero, false, c), std::invalid_argument);
}

TEST_CASE("an idle step without a query spends no oracle calls") {
  BasicReduction red(2, 0.1, 3);
  OracleCounter c;
  auto b1 = fixture::seven_node_batch1(1);
  red.step(b1, false, c);
  auto before = c.total();

  auto out = red.step({}, false, c);
  CHECK_FALSE(out.has_value());
  CHECK(c.total() == before);
  CHECK(red.instance_count() == 3);
}
