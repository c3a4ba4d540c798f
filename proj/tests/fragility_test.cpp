#include "respan/fragility.hpp"

#include <gtest/gtest.h>

#include "respan/generators.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using respan::Fragility;
using respan::FragilityMap;
using respan::Graph;

namespace {

TEST(FragilityValue, ComparisonsAreExactRationals) {
  Fragility a = Fragility::ratio(7.0, 3.0);
  Fragility b = Fragility::ratio(14.0, 6.0);
  Fragility c = Fragility::ratio(5.0, 2.0);
  EXPECT_EQ(a, b);
  EXPECT_LT(a, c);
  EXPECT_GT(Fragility::infinite(), c);
  EXPECT_EQ(Fragility::infinite(), Fragility::infinite());
  EXPECT_TRUE(a.exceeds(2.0));
  EXPECT_FALSE(a.exceeds(7.0 / 3.0));  // not strictly above itself
  EXPECT_TRUE(a.at_least(7.0 / 3.0));
  EXPECT_TRUE(Fragility::infinite().exceeds(1e9));
  EXPECT_THROW(Fragility::ratio(1.0, 0.0), std::invalid_argument);
}

TEST(EdgeFragility, CompleteGraphEdgesDetourInTwoHops) {
  Graph k4 = respan::gen_complete(4);
  for (int id = 0; id < k4.edge_count(); ++id)
    EXPECT_EQ(respan::edge_fragility(k4, id), Fragility::ratio(2.0, 1.0));
}

TEST(EdgeFragility, CycleEdgesDetourTheLongWay) {
  Graph c5 = respan::gen_cycle(5);
  for (int id = 0; id < c5.edge_count(); ++id)
    EXPECT_EQ(respan::edge_fragility(c5, id), Fragility::ratio(4.0, 1.0));
}

TEST(EdgeFragility, BridgesAreInfinite) {
  Graph p3 = respan::gen_path(3);
  EXPECT_TRUE(respan::edge_fragility(p3, 0).is_infinite());
  EXPECT_TRUE(respan::edge_fragility(p3, 1, 2).is_infinite());
}

TEST(EdgeFragility, HeavyEdgeBaseUsesTheBetterRoute) {
  // direct edge weight 5, alternative route 0-1-2 of weight 4: removing the
  // direct edge leaves distance 4, and the base distance is already 4.
  Graph g = Graph::build(3, {{0, 2, 5.0}, {0, 1, 2.0}, {1, 2, 2.0}});
  EXPECT_EQ(respan::edge_fragility(g, 0, 2), Fragility::ratio(4.0, 4.0));
}

TEST(EdgeFragility, RejectsMissingEdge) {
  Graph c4 = respan::gen_cycle(4);
  EXPECT_THROW(respan::edge_fragility(c4, 0, 2), std::invalid_argument);
  EXPECT_THROW(respan::edge_fragility(c4, 99), std::invalid_argument);
}

TEST(EdgeFragility, NeverBelowTwoOnUnitWeightNonBridges) {
  for (const Graph& g : testsupport::small_connected_corpus(25, 20, 301)) {
    for (int id = 0; id < g.edge_count(); ++id) {
      Fragility f = respan::edge_fragility(g, id);
      if (!f.is_infinite()) {
        EXPECT_TRUE(f.at_least(2.0));
      }
    }
  }
}

TEST(EndpointFormula, AgreesWithPairMaximizationOracle) {
  auto check = [](const Graph& g) {
    for (int id = 0; id < g.edge_count(); ++id) {
      Fragility fast = respan::edge_fragility(g, id);
      Fragility slow = respan::fragility_oracle(g, id);
      EXPECT_EQ(Fragility::compare(fast, slow), 0)
          << "edge " << g.edge(id).u << "-" << g.edge(id).v;
    }
  };
  for (const Graph& g : testsupport::small_connected_corpus(20, 16, 401)) check(g);
  for (const Graph& g : testsupport::small_connected_corpus(20, 14, 501, 8)) check(g);
}

TEST(PairMaximizationOracle, AgreesWithMatrixImplementation) {
  for (const Graph& g : testsupport::small_connected_corpus(10, 12, 601, 5)) {
    for (int id = 0; id < g.edge_count(); ++id) {
      double want = testsupport::fw_fragility(g, id);
      Fragility got = respan::fragility_oracle(g, id);
      if (want == testsupport::kInf) {
        EXPECT_TRUE(got.is_infinite());
      } else {
        EXPECT_TRUE(respan::nearly_equal(got.value(), want));
      }
    }
  }
}

TEST(AllFragilities, MatchesPerEdgeCalls) {
  Graph g = testsupport::random_two_edge_connected(12, 20, 3);
  FragilityMap fm = respan::all_fragilities(g);
  ASSERT_EQ(static_cast<int>(fm.size()), g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id)
    EXPECT_EQ(fm[static_cast<std::size_t>(id)], respan::edge_fragility(g, id));
}

TEST(AllFragilities, ThreadCountDoesNotChangeResults) {
  Graph g = testsupport::random_two_edge_connected(16, 34, 8, 1, 6);
  FragilityMap one = respan::all_fragilities(g, 1);
  FragilityMap four = respan::all_fragilities(g, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].is_infinite(), four[i].is_infinite());
    if (!one[i].is_infinite()) {
      EXPECT_DOUBLE_EQ(one[i].detour(), four[i].detour());
      EXPECT_DOUBLE_EQ(one[i].base(), four[i].base());
    }
  }
}

TEST(AllFragilities, StarIsAllBridges) {
  FragilityMap fm = respan::all_fragilities(respan::gen_star(6));
  for (const Fragility& f : fm) EXPECT_TRUE(f.is_infinite());
}

TEST(HighFragilitySubgraph, ThresholdSelectsExactly) {
  Graph c5 = respan::gen_cycle(5);
  FragilityMap fm = respan::all_fragilities(c5);
  EXPECT_EQ(respan::high_fragility_subgraph(c5, 3.0, fm).edge_count(), 5);  // all frag 4
  EXPECT_EQ(respan::high_fragility_subgraph(c5, 4.0, fm).edge_count(), 0);  // strict
  Graph k4 = respan::gen_complete(4);
  EXPECT_EQ(respan::high_fragility_subgraph(k4, 2.0).edge_count(), 0);
}

TEST(HighFragilitySubgraph, KeepsBridges) {
  Graph g = Graph::build(4, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}});
  Graph h = respan::high_fragility_subgraph(g, 100.0);
  EXPECT_EQ(h.edge_count(), 1);
  EXPECT_TRUE(h.has_edge(2, 3));
}

TEST(HighFragilitySubgraph, RejectsMismatchedMap) {
  Graph c4 = respan::gen_cycle(4);
  FragilityMap tooShort(2, Fragility::one());
  EXPECT_THROW(respan::high_fragility_subgraph(c4, 2.0, tooShort), std::invalid_argument);
}

TEST(GirthBound, FragileEdgesNeverFormShortCycles) {
  for (const Graph& g : testsupport::small_connected_corpus(30, 22, 701)) {
    for (int sigma = 2; sigma <= 6; ++sigma) EXPECT_TRUE(respan::check_girth_bound(g, sigma));
  }
  for (const Graph& g : testsupport::small_connected_corpus(15, 16, 801, 6)) {
    for (int sigma = 2; sigma <= 6; ++sigma) EXPECT_TRUE(respan::check_girth_bound(g, sigma));
  }
}

TEST(GirthBound, HonestOnHandBuiltSubthresholdCycle) {
  // C_5 has all fragilities 4: above sigma = 3 the subgraph is the whole
  // cycle, whose 5 hops beat sigma + 1 = 4; at sigma = 4 it is empty.
  Graph c5 = respan::gen_cycle(5);
  EXPECT_TRUE(respan::check_girth_bound(c5, 3.0));
  EXPECT_TRUE(respan::check_girth_bound(c5, 4.0));
}

}  // namespace
