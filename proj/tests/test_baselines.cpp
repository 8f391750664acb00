#include <random>
#include <vector>

#include "doctest.h"
#include "random_graphs.hpp"
#include "sample_stream.hpp"
#include "tdn/baselines.hpp"
#include "tdn/graph.hpp"
#include "tdn/oracle.hpp"

using tdn::NodeSet;
using tdn::OracleCounter;
using tdn::TdnGraph;

TEST_CASE("greedy picks the frozen trace on the seven-node stream") {
  TdnGraph g(1);
  g.insert_batch(fixture::seven_node_batch1(1));
  OracleCounter c;

  auto sol2 = tdn::greedy(g, 2, c);
  CHECK(sol2.nodes == NodeSet{1, 6});
  CHECK(sol2.value == 6);

  auto sol3 = tdn::greedy(g, 3, c);
  CHECK(sol3.nodes == NodeSet{1, 5, 6});
  CHECK(sol3.value == 7);

  // Once everything is covered the remaining rounds add nothing and greedy
  // stops short of k.
  auto sol10 = tdn::greedy(g, 10, c);
  CHECK(sol10.nodes == NodeSet{1, 5, 6});
  CHECK(sol10.value == 7);

  CHECK(tdn::greedy(g, 0, c).nodes.empty());
}

TEST_CASE("greedy value equals the spread of its selection") {
  for (std::uint64_t seed : {5u, 6u, 7u}) {
    TdnGraph g(1);
    auto batches = fixture::random_batches(14, 10, 1, 3, seed);
    g.insert_batch(batches[0]);

    OracleCounter c;
    auto sol = tdn::greedy(g, 3, c);
    OracleCounter probe;
    CHECK(sol.value == tdn::spread(g, sol.nodes, probe));
  }
}

TEST_CASE("greedy clears the classic submodular guarantee") {
  for (std::uint64_t seed : {81u, 82u, 83u, 84u}) {
    TdnGraph g(1);
    auto batches = fixture::random_batches(12, 8, 1, 2, seed);
    g.insert_batch(batches[0]);

    OracleCounter c;
    auto sol = tdn::greedy(g, 2, c);
    auto opt = tdn::brute_force_opt(g, 2, c);
    CHECK(static_cast<double>(sol.value) >=
          (1.0 - 1.0 / std::exp(1.0)) * static_cast<double>(opt.value));
  }
}

TEST_CASE("lazy evaluation returns greedy's answer with fewer calls") {
  TdnGraph g(1);
  g.insert_batch(fixture::seven_node_batch1(1));

  SUBCASE("on the seven-node stream") {
    OracleCounter cg, cl;
    auto plain = tdn::greedy(g, 2, cg);
    auto lazy = tdn::lazy_greedy(g, 2, cl);
    CHECK(lazy.nodes == plain.nodes);
    CHECK(lazy.value == plain.value);
    CHECK(cl.total() <= cg.total());
  }

  SUBCASE("across random graphs and budgets") {
    for (std::uint64_t seed : {21u, 22u, 23u, 24u, 25u}) {
      TdnGraph r(1);
      auto batches = fixture::random_batches(16, 12, 1, 2, seed);
      r.insert_batch(batches[0]);
      for (int k : {1, 2, 4}) {
        OracleCounter cg, cl;
        auto plain = tdn::greedy(r, k, cg);
        auto lazy = tdn::lazy_greedy(r, k, cl);
        CHECK(lazy.nodes == plain.nodes);
        CHECK(lazy.value == plain.value);
        CHECK(cl.total() <= cg.total());
      }
    }
  }
}

TEST_CASE("random baseline draws a reproducible uniform subset") {
  TdnGraph g(1);
  g.insert_batch(fixture::seven_node_batch1(1));

  std::mt19937_64 r1(99), r2(99), r3(100);
  OracleCounter c;
  auto a = tdn::random_solution(g, 3, r1, c);
  auto b = tdn::random_solution(g, 3, r2, c);
  CHECK(a.nodes == b.nodes);
  CHECK(a.nodes.size() == 3);
  for (tdn::NodeId v : a.nodes) CHECK(g.contains_node(v));

  OracleCounter probe;
  CHECK(a.value == tdn::spread(g, a.nodes, probe));
  CHECK(c.query_calls() == 2);  // one pricing call per draw

  // k larger than the graph takes everything.
  auto all = tdn::random_solution(g, 50, r3, c);
  CHECK(all.nodes.size() == 7);
  CHECK(all.value == 7);
}
