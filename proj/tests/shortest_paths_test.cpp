#include "respan/shortest_paths.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "respan/generators.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using respan::BackupCycle;
using respan::Distance;
using respan::Graph;
using respan::Path;

namespace {

void expect_matches_matrix(const Graph& g) {
  auto oracle = testsupport::fw_apsp(g);
  for (int x = 0; x < g.vertex_count(); ++x) {
    auto d = respan::sssp(g, x);
    for (int y = 0; y < g.vertex_count(); ++y) {
      double want = oracle[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (want == testsupport::kInf) {
        EXPECT_TRUE(d[static_cast<std::size_t>(y)].is_unreachable()) << x << "->" << y;
      } else {
        ASSERT_TRUE(d[static_cast<std::size_t>(y)].is_finite()) << x << "->" << y;
        EXPECT_TRUE(respan::nearly_equal(d[static_cast<std::size_t>(y)].value(), want))
            << x << "->" << y;
      }
    }
  }
}

TEST(Sssp, CycleDistancesWrapBothWays) {
  Graph c5 = respan::gen_cycle(5);
  auto d = respan::sssp(c5, 0);
  EXPECT_DOUBLE_EQ(d[1].value(), 1.0);
  EXPECT_DOUBLE_EQ(d[2].value(), 2.0);
  EXPECT_DOUBLE_EQ(d[3].value(), 2.0);
  EXPECT_DOUBLE_EQ(d[4].value(), 1.0);
}

TEST(Sssp, DisconnectedPairsAreUnreachable) {
  Graph g = Graph::build(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  auto d = respan::sssp(g, 0);
  EXPECT_TRUE(d[2].is_unreachable());
  EXPECT_TRUE(d[3].is_unreachable());
  EXPECT_DOUBLE_EQ(d[1].value(), 1.0);
}

TEST(Sssp, WeightedUsesDijkstra) {
  // direct edge is heavier than the two-hop route
  Graph g = Graph::build(3, {{0, 2, 5.0}, {0, 1, 2.0}, {1, 2, 2.0}});
  EXPECT_DOUBLE_EQ(respan::distance(g, 0, 2).value(), 4.0);
}

TEST(Sssp, RejectsBadSource) {
  EXPECT_THROW(respan::sssp(respan::gen_cycle(4), 4), std::invalid_argument);
  EXPECT_THROW(respan::sssp(respan::gen_cycle(4), -1), std::invalid_argument);
}

TEST(Sssp, AgreesWithMatrixOracleOnCorpus) {
  for (const Graph& g : testsupport::small_connected_corpus(25, 24, 11)) expect_matches_matrix(g);
  for (const Graph& g : testsupport::small_connected_corpus(25, 20, 77, 8))
    expect_matches_matrix(g);
}

TEST(DistanceAvoidingEdge, CycleForcesTheLongWayAround) {
  Graph c5 = respan::gen_cycle(5);
  auto r = respan::distance_avoiding_edge(c5, 0, 1, c5.edge_index(0, 1));
  ASSERT_TRUE(r.dist.is_finite());
  EXPECT_DOUBLE_EQ(r.dist.value(), 4.0);
  ASSERT_TRUE(r.path.has_value());
  EXPECT_TRUE(testsupport::is_simple_path(c5, *r.path, 0, 1, 4.0));
}

TEST(DistanceAvoidingEdge, BridgeRemovalDisconnects) {
  Graph p3 = respan::gen_path(3);
  auto r = respan::distance_avoiding_edge(p3, 0, 2, p3.edge_index(1, 2));
  EXPECT_TRUE(r.dist.is_unreachable());
  EXPECT_FALSE(r.path.has_value());
}

TEST(DistanceAvoidingEdge, OtherPairsCanStillUseShortRoutes) {
  Graph k4 = respan::gen_complete(4);
  auto r = respan::distance_avoiding_edge(k4, 2, 3, k4.edge_index(0, 1));
  EXPECT_DOUBLE_EQ(r.dist.value(), 1.0);
}

TEST(DistanceAvoidingEdge, MatchesMatrixOracleOnCorpus) {
  for (const Graph& g : testsupport::small_connected_corpus(12, 16, 5, 6)) {
    for (int id = 0; id < g.edge_count(); ++id) {
      auto oracle = testsupport::fw_apsp(g, id);
      const Graph::Edge& e = g.edge(id);
      auto r = respan::distance_avoiding_edge(g, e.u, e.v, id);
      double want = oracle[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
      if (want == testsupport::kInf) {
        EXPECT_TRUE(r.dist.is_unreachable());
      } else {
        ASSERT_TRUE(r.dist.is_finite());
        EXPECT_TRUE(respan::nearly_equal(r.dist.value(), want));
        ASSERT_TRUE(r.path.has_value());
        EXPECT_TRUE(testsupport::is_simple_path(g, *r.path, e.u, e.v, want));
      }
    }
  }
}

// The tie-break rule is "smallest predecessor at every step walking back
// from the target", i.e. among all shortest paths the witness is the one
// whose vertex sequence read from the target side is lexicographically
// smallest.
TEST(DistanceAvoidingEdge, WitnessPathUsesSmallestPredecessors) {
  for (const Graph& g : testsupport::tiny_corpus(3)) {
    for (int id = 0; id < g.edge_count(); ++id) {
      const Graph::Edge& e = g.edge(id);
      auto r = respan::distance_avoiding_edge(g, e.u, e.v, id);
      if (!r.path) continue;
      auto all = testsupport::all_shortest_paths(g, e.u, e.v, id);
      ASSERT_FALSE(all.empty());
      std::vector<int> best;
      for (auto p : all) {
        std::reverse(p.begin(), p.end());
        if (best.empty() || p < best) best = p;
      }
      std::reverse(best.begin(), best.end());
      EXPECT_EQ(r.path->vertices, best);
    }
  }
}

TEST(ShortCycle, WholeCycleForCycleGraph) {
  Graph c5 = respan::gen_cycle(5);
  auto c = respan::short_cycle(c5, c5.edge_index(0, 1));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->path.edge_count(), 4);
  EXPECT_EQ(respan::cycle_edge_ids(c5, *c).size(), 5u);
}

TEST(ShortCycle, TriangleInCompleteGraph) {
  Graph k4 = respan::gen_complete(4);
  auto c = respan::short_cycle(k4, k4.edge_index(0, 1));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->path.edge_count(), 2);
  // lexicographically minimal detour 0-2-1
  EXPECT_EQ(c->path.vertices, (std::vector<int>{0, 2, 1}));
}

TEST(ShortCycle, NoneForBridges) {
  Graph p4 = respan::gen_path(4);
  EXPECT_FALSE(respan::short_cycle(p4, 0).has_value());
}

TEST(ShortCycle, EveryNonBridgeEdgeOfTwoEdgeConnectedGraphHasOne) {
  Graph g = testsupport::random_two_edge_connected(14, 25, 9);
  for (int id = 0; id < g.edge_count(); ++id) {
    auto c = respan::short_cycle(g, id);
    ASSERT_TRUE(c.has_value());
    // the cycle goes through the edge: path endpoints are the edge endpoints
    EXPECT_EQ(c->path.source(), c->target.u);
    EXPECT_EQ(c->path.target(), c->target.v);
  }
}

TEST(Apsp, MatchesPerSourceRuns) {
  Graph g = respan::gen_grid(3, 3);
  auto all = respan::apsp(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    EXPECT_EQ(all[static_cast<std::size_t>(v)], respan::sssp(g, v));
}

}  // namespace
