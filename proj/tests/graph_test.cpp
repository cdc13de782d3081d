#include <gtest/gtest.h>

#include "support.hpp"

namespace mimic {
namespace {

using testing::capacitated;
using testing::complete;
using testing::simple;

TEST(FromCapacitated, CapsCapacityAtThreshold) {
  auto g = from_capacitated(2, capacitated({{0, 1, 5}}), 3);
  ASSERT_EQ(g.num_edges(), 1);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 3}));
}

TEST(FromCapacitated, KeepsSmallCapacity) {
  auto g = from_capacitated(2, capacitated({{0, 1, 1}}), 3);
  EXPECT_EQ(g.edge(0).multiplicity, 1);
}

TEST(FromCapacitated, MergedParallelRecordsAreCappedAgain) {
  auto edges = capacitated({{0, 1, 2}, {0, 1, 2}});
  auto g = from_capacitated(2, edges, 3);
  ASSERT_EQ(g.num_edges(), 1);
  EXPECT_EQ(g.edge(0).multiplicity, 3);
  EXPECT_EQ(oracle_weighted_mincut(2, edges, {0}, {1}), 4);
  EXPECT_EQ(std::min<std::int64_t>(3, oracle_weighted_mincut(2, edges, {0}, {1})),
            thresholded_mincut(g, {0}, {1}, 3));
}

TEST(FromCapacitated, RejectsNonPositiveCapacity) {
  EXPECT_THROW(from_capacitated(2, capacitated({{0, 1, 0}}), 2), InputError);
  EXPECT_THROW(from_capacitated(2, capacitated({{0, 1, 1}}), 0), InputError);
}

TEST(FromCapacitated, ThresholdedCutsMatchWeightedCuts) {
  Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    const int n = static_cast<int>(rng.uniform(2, 7));
    std::vector<CapacitatedEdge> edges;
    for (int i = 0; i < 2 * n; ++i) {
      auto u = static_cast<Vertex>(rng.uniform(0, n - 1));
      auto v = static_cast<Vertex>(rng.uniform(0, n - 1));
      if (u != v) edges.push_back(CapacitatedEdge{u, v, rng.uniform(1, 6)});
    }
    const int c = static_cast<int>(rng.uniform(1, 4));
    auto g = from_capacitated(n, edges, c);
    for (std::uint64_t code = 0; code < 81 && n >= 2; ++code) {
      VertexSet a, b;
      std::uint64_t x = code;
      for (int v = 0; v < std::min(n, 4); ++v, x /= 3) {
        if (x % 3 == 1) a.push_back(v);
        if (x % 3 == 2) b.push_back(v);
      }
      const auto expected = std::min<std::int64_t>(c, oracle_weighted_mincut(n, edges, a, b));
      ASSERT_EQ(thresholded_mincut(g, a, b, c), expected);
    }
  }
}

TEST(MultiGraph, MergesParallelRecordsAndOrdersEndpoints) {
  MultiGraph g(3, {Edge{2, 1, 1}, Edge{1, 2, 2}, Edge{0, 1, 1}});
  ASSERT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edge(1), (Edge{1, 2, 3}));
  EXPECT_EQ(g.degree(1), 4);
  EXPECT_EQ(g.multiplicity(2, 1), 3);
  EXPECT_EQ(g.total_multiplicity(), 4);
  EXPECT_THROW(MultiGraph(2, {Edge{0, 0, 1}}), InputError);
  EXPECT_THROW(MultiGraph(2, {Edge{0, 2, 1}}), InputError);
}

TEST(NormalizeTerminals, SingleEdgeGetsTwoPendantsPerTerminal) {
  auto g = simple(2, {{0, 1}});
  auto norm = normalize_terminals(g, {0, 1}, 2);
  EXPECT_EQ(norm.graph.num_vertices(), 6);
  EXPECT_EQ(norm.terminals, (TerminalSet{2, 3, 4, 5}));
  EXPECT_EQ(norm.graph.degree(0), 3);
  EXPECT_EQ(norm.graph.degree(1), 3);
  for (Vertex t : norm.terminals) EXPECT_EQ(norm.graph.degree(t), 1);
  EXPECT_EQ(norm.copies[0], (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(norm.copies[1], (std::vector<Vertex>{4, 5}));
}

TEST(NormalizeTerminals, DegreeOneTerminalStillWrapped) {
  auto g = simple(2, {{0, 1}});
  auto norm = normalize_terminals(g, {0}, 1);
  EXPECT_EQ(norm.graph.num_vertices(), 3);
  EXPECT_EQ(norm.graph.degree(0), 2);
}

TEST(NormalizeTerminals, CopiesOfOneTerminalAreSeparatedByOneEdge) {
  auto g = complete(3);
  auto norm = normalize_terminals(g, {0}, 3);
  ASSERT_EQ(norm.terminals.size(), 3u);
  EXPECT_EQ(thresholded_mincut(norm.graph, {norm.terminals[0]}, {norm.terminals[1]}, 3), 1);
  EXPECT_EQ(thresholded_mincut(norm.graph, {norm.terminals[0], norm.terminals[1]},
                               {norm.terminals[2]}, 3),
            1);
}

TEST(Boundary, WholeVertexSetHasNone) {
  EXPECT_TRUE(boundary(complete(4), {0, 1, 2, 3}).empty());
}

TEST(Boundary, PathMiddle) {
  auto b = boundary(simple(3, {{0, 1}, {1, 2}}), {1});
  EXPECT_EQ(b, (std::vector<Edge>{{0, 1, 1}, {1, 2, 1}}));
}

TEST(Boundary, CompleteGraphHalf) {
  EXPECT_EQ(boundary(complete(4), {0, 1}).size(), 4u);
  EXPECT_EQ(boundary_size(complete(4), {0, 1}), 4);
}

TEST(Contract, TriangleEdgeBecomesDoubleEdge) {
  auto c = contract(complete(3), {0, 1});
  EXPECT_EQ(c.graph.num_vertices(), 2);
  ASSERT_EQ(c.graph.num_edges(), 1);
  EXPECT_EQ(c.graph.edge(0).multiplicity, 2);
  EXPECT_EQ(c.map(0), c.map(1));
  EXPECT_NE(c.map(0), c.map(2));
  EXPECT_EQ(thresholded_mincut(c.graph, {c.map(2)}, {c.map(0)}, 3),
            oracle_mincut_bruteforce(complete(3), {2}, {0, 1}));
}

TEST(Contract, SingleVertexIsIdentity) {
  auto g = simple(3, {{0, 1}, {1, 2}});
  auto c = contract(g, {1});
  EXPECT_EQ(c.graph.num_vertices(), 3);
  EXPECT_EQ(c.graph.edges().size(), g.edges().size());
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(c.map(v), v);
}

TEST(Contract, DisconnectedPartsStaySeparate) {
  auto c = contract(simple(3, {{0, 1}, {1, 2}}), {0, 2});
  EXPECT_EQ(c.graph.num_vertices(), 3);
  EXPECT_NE(c.map(0), c.map(2));
}

TEST(PendantView, WholeGraphHasNoPendants) {
  auto pv = pendant_view(complete(4), {0, 1, 2, 3});
  EXPECT_TRUE(pv.terminals.empty());
  EXPECT_EQ(pv.graph.num_edges(), 6);
}

TEST(PendantView, PathMiddleIsAStar) {
  auto pv = pendant_view(simple(3, {{0, 1}, {1, 2}}), {1});
  EXPECT_EQ(pv.graph.num_vertices(), 3);
  EXPECT_EQ(pv.terminals.size(), 2u);
  EXPECT_EQ(pv.graph.degree(0), 2);
  EXPECT_EQ(pv.pendant_source, (std::vector<Vertex>{0, 2}));
}

TEST(PendantView, CompleteGraphHalfMatchesBoundary) {
  auto g = complete(4);
  auto pv = pendant_view(g, {0, 1});
  EXPECT_EQ(static_cast<int>(pv.terminals.size()), boundary_size(g, {0, 1}));
  EXPECT_EQ(pv.graph.degree(0), 3);
  EXPECT_EQ(pv.graph.degree(1), 3);
  EXPECT_EQ(pv.graph.multiplicity(0, 1), 1);
}

TEST(Components, CountsAndSets) {
  auto g = simple(5, {{0, 1}, {2, 3}});
  auto parts = component_sets(g, {0, 1, 2, 3, 4});
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], (VertexSet{0, 1}));
  EXPECT_EQ(parts[2], (VertexSet{4}));
}

TEST(Sets, Operations) {
  EXPECT_EQ(make_set({3, 1, 3}), (VertexSet{1, 3}));
  EXPECT_EQ(set_union({1, 3}, {2, 3}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(set_intersection({1, 3}, {2, 3}), (VertexSet{3}));
  EXPECT_EQ(set_difference({1, 3}, {2, 3}), (VertexSet{1}));
  EXPECT_TRUE(disjoint({1}, {2}));
  EXPECT_FALSE(disjoint({1, 2}, {2}));
}

}  // namespace
}  // namespace mimic
