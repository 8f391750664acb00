#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "sample_stream.hpp"
#include "tdn/graph.hpp"

using tdn::Interaction;
using tdn::kInfiniteLifetime;
using tdn::NodeId;
using tdn::TdnGraph;

namespace {

using Endpoints = std::vector<std::pair<NodeId, NodeId>>;

Endpoints endpoints(const std::vector<Interaction>& edges) {
  Endpoints out;
  for (const Interaction& e : edges) out.emplace_back(e.source, e.target);
  return out;
}

}  // namespace

TEST_CASE("alive edges and nodes track insertion, expiry, and rebirth") {
  TdnGraph g(1);
  g.insert_batch(fixture::seven_node_batch1(1));

  CHECK(g.now() == 1);
  CHECK(g.num_alive_edges() == 6);
  CHECK(g.num_alive_nodes() == 7);
  CHECK(g.alive_node_ids() == std::vector<NodeId>{1, 2, 3, 4, 5, 6, 7});
  CHECK(g.last_batch_new_nodes().size() == 7);

  auto r2 = g.advance_time();
  CHECK(g.now() == 2);
  CHECK(endpoints(r2.expired_edges) ==
        Endpoints{{1, 2}, {1, 3}, {6, 4}, {6, 7}});
  CHECK(r2.removed_nodes == std::vector<NodeId>{2, 6, 7});
  CHECK(endpoints(g.alive_edges()) == Endpoints{{1, 4}, {5, 3}});
  CHECK(g.alive_node_ids() == std::vector<NodeId>{1, 3, 4, 5});
  CHECK(g.contains_node(1));
  CHECK_FALSE(g.contains_node(2));

  g.insert_batch(fixture::seven_node_batch2(2));
  CHECK(g.num_alive_edges() == 5);
  CHECK(g.num_alive_nodes() == 7);
  // 2, 6, and 7 died in the expiry above and are revived by this batch.
  auto fresh = g.last_batch_new_nodes();
  CHECK(std::vector<NodeId>(fresh.begin(), fresh.end()) ==
        std::vector<NodeId>{2, 6, 7});

  auto r3 = g.advance_time();
  CHECK(endpoints(r3.expired_edges) == Endpoints{{1, 4}, {5, 2}});
  CHECK(r3.removed_nodes == std::vector<NodeId>{1, 2});
  CHECK(g.alive_node_ids() == std::vector<NodeId>{3, 4, 5, 6, 7});

  auto r4 = g.advance_time();
  CHECK(endpoints(r4.expired_edges) == Endpoints{{5, 3}, {7, 4}});
  CHECK(r4.removed_nodes == std::vector<NodeId>{3, 4, 5});
  CHECK(g.alive_node_ids() == std::vector<NodeId>{6, 7});

  auto r5 = g.advance_time();
  CHECK(endpoints(r5.expired_edges) == Endpoints{{7, 6}});
  CHECK(r5.removed_nodes == std::vector<NodeId>{6, 7});
  CHECK(g.num_alive_edges() == 0);
  CHECK(g.num_alive_nodes() == 0);

  auto r6 = g.advance_time();
  CHECK(r6.expired_edges.empty());
  CHECK(r6.removed_nodes.empty());
}

TEST_CASE("dense indices persist across node death") {
  TdnGraph g(1);
  g.insert_batch({{1, 2, 1, 1}});
  std::int32_t d2 = g.dense_of(2);
  REQUIRE(d2 >= 0);
  CHECK(g.node_alive(d2));

  g.advance_time();
  CHECK(g.dense_of(2) == d2);
  CHECK_FALSE(g.node_alive(d2));
  CHECK_FALSE(g.contains_node(2));

  g.insert_batch({{3, 2, 2, 1}});
  CHECK(g.dense_of(2) == d2);
  CHECK(g.node_alive(d2));
  CHECK(g.dense_count() == 3);
}

TEST_CASE("range query selects edges by remaining lifetime") {
  TdnGraph g(1);
  g.insert_batch(fixture::seven_node_batch1(1));

  SUBCASE("at the arrival step remaining lifetime equals lifetime") {
    CHECK(endpoints(g.edges_with_remaining_lifetime_in(2, 4)) ==
          Endpoints{{1, 4}, {5, 3}});
    CHECK(endpoints(g.edges_with_remaining_lifetime_in(1, 2)) ==
          Endpoints{{1, 2}, {1, 3}, {6, 4}, {6, 7}});
    CHECK(g.edges_with_remaining_lifetime_in(1, kInfiniteLifetime).size() == 6);
    CHECK(endpoints(g.edges_with_remaining_lifetime_in(3, kInfiniteLifetime)) ==
          Endpoints{{5, 3}});
    CHECK(g.edges_with_remaining_lifetime_in(4, kInfiniteLifetime).empty());
    CHECK(g.edges_with_remaining_lifetime_in(2, 2).empty());
    CHECK_THROWS_AS(g.edges_with_remaining_lifetime_in(0, 4),
                    std::invalid_argument);
  }

  SUBCASE("remaining lifetime shrinks as the clock advances") {
    g.advance_time();
    g.insert_batch(fixture::seven_node_batch2(2));
    CHECK(endpoints(g.edges_with_remaining_lifetime_in(3, 4)) ==
          Endpoints{{7, 6}});
    CHECK(endpoints(g.edges_with_remaining_lifetime_in(2, 3)) ==
          Endpoints{{5, 3}, {7, 4}});
    CHECK(g.edges_with_remaining_lifetime_in(1, kInfiniteLifetime).size() == 5);
  }
}

TEST_CASE("infinite-lifetime edges never expire") {
  TdnGraph g(1);
  g.insert_batch({{1, 2, 1, kInfiniteLifetime}, {1, 3, 1, 5}});

  CHECK(g.edges_with_remaining_lifetime_in(1, kInfiniteLifetime).size() == 2);
  CHECK(endpoints(g.edges_with_remaining_lifetime_in(6, kInfiniteLifetime)) ==
        Endpoints{{1, 2}});
  CHECK(endpoints(g.edges_with_remaining_lifetime_in(1, 6)) ==
        Endpoints{{1, 3}});

  for (int i = 0; i < 20; ++i) g.advance_time();
  CHECK(g.now() == 21);
  CHECK(endpoints(g.alive_edges()) == Endpoints{{1, 2}});
  CHECK(g.alive_node_ids() == std::vector<NodeId>{1, 2});
}

TEST_CASE("parallel edges are distinct and slots are recycled") {
  TdnGraph g(1);
  g.insert_batch({{1, 2, 1, 1}, {1, 2, 1, 2}});
  CHECK(g.num_alive_edges() == 2);
  CHECK(g.num_alive_nodes() == 2);

  g.advance_time();
  CHECK(g.num_alive_edges() == 1);
  CHECK(g.contains_node(1));

  g.insert_batch({{2, 1, 2, 3}, {1, 2, 2, 1}});
  CHECK(g.num_alive_edges() == 3);

  g.advance_time();  // drops (1,2,l2) from step 1 and (1,2,l1) from step 2
  CHECK(endpoints(g.alive_edges()) == Endpoints{{2, 1}});
}

TEST_CASE("malformed batches are rejected whole") {
  TdnGraph g(5);

  std::vector<Interaction> stale_arrival{{1, 2, 4, 1}};
  std::vector<Interaction> self_loop{{1, 1, 5, 1}};
  std::vector<Interaction> zero_lifetime{{1, 2, 5, 0}};
  std::vector<Interaction> negative_lifetime{{1, 2, 5, -3}};
  std::vector<Interaction> bad_tail{{1, 2, 5, 1}, {3, 3, 5, 1}};

  CHECK_THROWS_AS(g.insert_batch(stale_arrival), std::invalid_argument);
  CHECK_THROWS_AS(g.insert_batch(self_loop), std::invalid_argument);
  CHECK_THROWS_AS(g.insert_batch(zero_lifetime), std::invalid_argument);
  CHECK_THROWS_AS(g.insert_batch(negative_lifetime), std::invalid_argument);

  // A bad record anywhere in the batch leaves the graph untouched.
  CHECK_THROWS_AS(g.insert_batch(bad_tail), std::invalid_argument);
  CHECK(g.num_alive_edges() == 0);
  CHECK(g.num_alive_nodes() == 0);
  CHECK(g.dense_count() == 0);
}
