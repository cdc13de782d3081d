#include <gtest/gtest.h>

#include "support.hpp"

namespace mimic {
namespace {

TEST(OracleEquivalence, IdenticalGraphsAreEqual) {
  auto inst = generate_graph_instance(8, 12, 2, 2, 1);
  auto norm = normalize_terminals(from_capacitated(8, inst.edges, 2), inst.terminals, 2);
  EXPECT_FALSE(oracle_cut_equivalence(norm.graph, norm.graph, norm.terminals, norm.terminals, 2));
}

TEST(OracleEquivalence, DeletedPendantEdgeIsACounterexample) {
  auto inst = generate_graph_instance(6, 8, 2, 2, 2);
  auto norm = normalize_terminals(from_capacitated(6, inst.edges, 2), inst.terminals, 2);
  const Vertex victim = norm.terminals[0];
  std::vector<Edge> edges;
  for (const Edge& e : norm.graph.edges()) {
    if (e.u != victim && e.v != victim) edges.push_back(e);
  }
  MultiGraph h(norm.graph.num_vertices(), edges);
  auto cex = oracle_cut_equivalence(norm.graph, h, norm.terminals, norm.terminals, 2);
  ASSERT_TRUE(cex);
  EXPECT_EQ(cex->value_h, 0);
  EXPECT_GT(cex->value_g, 0);
  EXPECT_TRUE(contains(cex->a, victim) || contains(cex->b, victim));
}

TEST(OracleConstrained, PlainSpecMatchesMincut) {
  auto g = testing::complete(5);
  auto cut = oracle_constrained_cut(g, {}, ConstrainedSpec{{0}, {3}, 0, 0, 10});
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->size(), bounded_mincut(g, {0}, {3}, 20)->size());
}

TEST(OracleConstrained, QuotaAboveTerminals) {
  MultiGraph g(3, {Edge{0, 1, 1}, Edge{0, 2, 1}});
  EXPECT_FALSE(oracle_constrained_cut(g, {1, 2}, ConstrainedSpec{{}, {}, 3, 0, 5}));
}

TEST(OracleImportant, SingleEdgeAndPath) {
  EXPECT_EQ(oracle_important_cuts(testing::simple(2, {{0, 1}}), {0}, {1}, 1).size(), 1u);
  auto path = oracle_important_cuts(testing::simple(3, {{0, 1}, {1, 2}}), {0}, {2}, 1);
  ASSERT_EQ(path.size(), 1u);
  EXPECT_EQ(path[0].side0, (VertexSet{0, 1}));
}

TEST(OracleSndp, NoDemandsCostsNothing) {
  SndpInstance inst{3, testing::capacitated({{0, 1, 4}, {1, 2, 5}}), 0, {}};
  auto sol = oracle_sndp(inst, 2);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->cost, 0);
  EXPECT_TRUE(sol->edges.empty());
}

TEST(OracleSndp, SingleDemandIsAShortestPath) {
  // 0-1-3 costs 2, 0-2-3 costs 4, direct 0-3 costs 5.
  SndpInstance inst{4, testing::capacitated({{0, 1, 1}, {1, 3, 1}, {0, 2, 2}, {2, 3, 2}, {0, 3, 5}}),
                    0, {Demand{3, 1}}};
  auto sol = oracle_sndp(inst, 1);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->cost, 2);
}

TEST(OracleSndp, BridgeMakesTwoConnectivityInfeasible) {
  SndpInstance inst{3, testing::capacitated({{0, 1, 1}, {1, 2, 1}, {1, 2, 1}}), 0, {Demand{2, 2}}};
  EXPECT_FALSE(oracle_sndp(inst, 2));
}

TEST(OracleGuards, RejectOversizedInputs) {
  auto big = testing::complete(25);
  EXPECT_ANY_THROW(oracle_mincut_bruteforce(big, {0}, {1}));
  EXPECT_ANY_THROW(oracle_important_cuts(testing::complete(13), {0}, {1}, 1));
}

TEST(OracleDeterminism, RepeatedCallsAgree) {
  auto pg = testing::PendantGraph{};
  Rng rng(1);
  pg = testing::random_pendant_graph(rng, 5, 3, 5);
  ConstrainedSpec spec{{}, {}, 2, 2, 2};
  auto a = oracle_constrained_cut(pg.graph, pg.terminals, spec);
  auto b = oracle_constrained_cut(pg.graph, pg.terminals, spec);
  ASSERT_EQ(a.has_value(), b.has_value());
  if (a) {
    EXPECT_EQ(a->side0, b->side0);
  }
}

}  // namespace
}  // namespace mimic
