#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace mimic {
namespace {

/// Star center 0 with `pendants` leaves 1..pendants.
testing::PendantGraph star(int pendants) {
  std::vector<Edge> edges;
  testing::PendantGraph out;
  for (int i = 1; i <= pendants; ++i) {
    edges.push_back(Edge{0, i, 1});
    out.terminals.push_back(i);
  }
  out.graph = MultiGraph(pendants + 1, std::move(edges));
  return out;
}

/// Centers 0 and 1 joined by a bridge, two pendants on each.
testing::PendantGraph two_stars() {
  testing::PendantGraph out;
  out.graph = MultiGraph(6, {Edge{0, 1, 1}, Edge{0, 2, 1}, Edge{0, 3, 1}, Edge{1, 4, 1}, Edge{1, 5, 1}});
  out.terminals = {2, 3, 4, 5};
  return out;
}

TEST(ConstrainedCut, StarCannotSplitWithOneEdge) {
  auto s = star(4);
  EXPECT_FALSE(find_constrained_cut(s.graph, s.terminals, ConstrainedSpec{{}, {}, 2, 2, 1}));
  EXPECT_FALSE(oracle_constrained_cut(s.graph, s.terminals, ConstrainedSpec{{}, {}, 2, 2, 1}));
}

TEST(ConstrainedCut, TwoStarsSplitAtTheBridge) {
  auto s = two_stars();
  ConstrainedSpec spec{{}, {}, 2, 2, 1};
  auto cut = find_constrained_cut(s.graph, s.terminals, spec);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->size(), 1);
  EXPECT_EQ(cut->cutset, (std::vector<Edge>{{0, 1, 1}}));
  EXPECT_TRUE(is_valid_constrained_cut(s.graph, s.terminals, spec, *cut));
}

TEST(ConstrainedCut, QuotaAboveTerminalCount) {
  auto s = star(3);
  EXPECT_FALSE(find_constrained_cut(s.graph, s.terminals, ConstrainedSpec{{}, {}, 4, 0, 5}));
  EXPECT_FALSE(oracle_constrained_cut(s.graph, s.terminals, ConstrainedSpec{{}, {}, 4, 0, 5}));
}

TEST(ConstrainedCut, NoQuotasIsAPlainMinimumCut) {
  auto g = testing::complete(5);
  auto cut = find_constrained_cut(g, {}, ConstrainedSpec{{0}, {4}, 0, 0, 10});
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->size(), 4);
  EXPECT_EQ(cut->size(), bounded_mincut(g, {0}, {4}, 11)->size());
}

TEST(ConstrainedCut, RejectsBadSpecsAndNonPendantTerminals) {
  auto s = two_stars();
  EXPECT_THROW(find_constrained_cut(s.graph, s.terminals, ConstrainedSpec{{0}, {0}, 0, 0, 1}),
               InputError);
  EXPECT_THROW(find_constrained_cut(s.graph, s.terminals, ConstrainedSpec{{2}, {}, 0, 0, 1}),
               InputError);
  EXPECT_THROW(find_constrained_cut(s.graph, {0}, ConstrainedSpec{{}, {}, 1, 1, 1}), InputError);
}

TEST(BaseCase, EmptyQ1TakesEverything) {
  auto s = two_stars();
  auto cut = solve_base(s.graph, s.terminals, {}, {}, 0, 0);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->side0.size(), 6u);
  EXPECT_EQ(cut->size(), 0);
}

TEST(BaseCase, BudgetBelowQ0Q1Mincut) {
  auto g = testing::complete(4);
  EXPECT_FALSE(solve_base(g, {}, {0}, {3}, 0, 2));
}

TEST(BaseCase, MatchesOracleOnTenVertexInstances) {
  Rng rng(77);
  int feasible = 0;
  for (int round = 0; round < 60; ++round) {
    auto pg = testing::random_pendant_graph(rng, 5, 3, 5);
    VertexSet q1{static_cast<Vertex>(rng.uniform(0, 4))};
    ConstrainedSpec spec{{}, q1, 3, 0, 2};
    auto cut = solve_base(pg.graph, pg.terminals, {}, q1, 3, 2);
    auto expected = oracle_constrained_cut(pg.graph, pg.terminals, spec);
    ASSERT_EQ(cut.has_value(), expected.has_value()) << "round " << round;
    if (cut) {
      ++feasible;
      ASSERT_TRUE(is_valid_constrained_cut(pg.graph, pg.terminals, spec, *cut));
    }
  }
  EXPECT_GT(feasible, 0);
}

TEST(BaseCase, MirroredQuotaSide) {
  auto s = two_stars();
  auto cut = solve_base(s.graph, s.terminals, {0}, {}, 2, 1, 1);
  ASSERT_TRUE(cut);
  EXPECT_TRUE(is_valid_constrained_cut(s.graph, s.terminals, ConstrainedSpec{{0}, {}, 0, 2, 1}, *cut));
}

/// Independent generator: all non-increasing slot sequences by brute force
/// over every tuple of (terminals, edges) values.
std::set<std::vector<std::pair<int, int>>> brute_profiles(int c, int ell) {
  std::set<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> values;
  for (int k = 1; k <= c - 1; ++k) {
    for (int e = 0; e <= ell; ++e) values.emplace_back(k, e);
  }
  const auto v = static_cast<int>(values.size());
  for (int len = 1; len <= c; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<std::pair<int, int>> seq;
      int kt = 0;
      int et = 0;
      for (int i : idx) {
        seq.push_back(values[static_cast<std::size_t>(i)]);
        kt += values[static_cast<std::size_t>(i)].first;
        et += values[static_cast<std::size_t>(i)].second;
      }
      std::sort(seq.rbegin(), seq.rend());
      if (kt >= c && kt <= 2 * c && et <= ell) out.insert(seq);
      int pos = 0;
      while (pos < len && ++idx[static_cast<std::size_t>(pos)] == v) idx[static_cast<std::size_t>(pos++)] = 0;
      if (pos == len) break;
    }
  }
  return out;
}

TEST(Profiles, MatchExhaustiveGeneration) {
  for (int c = 2; c <= 4; ++c) {
    for (int ell = 0; ell <= 3; ++ell) {
      std::set<std::vector<std::pair<int, int>>> got;
      for (const auto& p : enumerate_profiles(c, ell)) {
        std::vector<std::pair<int, int>> seq;
        for (const auto& s : p.slots) seq.emplace_back(s.terminals, s.edges);
        ASSERT_TRUE(std::is_sorted(seq.rbegin(), seq.rend()));
        ASSERT_TRUE(got.insert(seq).second) << "duplicate profile";
      }
      ASSERT_EQ(got, brute_profiles(c, ell)) << "c=" << c << " ell=" << ell;
    }
  }
}

TEST(Profiles, TwoWithBudgetOne) {
  auto profiles = enumerate_profiles(2, 1);
  for (const auto& p : profiles) {
    for (const auto& s : p.slots) EXPECT_EQ(s.terminals, 1);
    EXPECT_GE(p.total_terminals(), 2);
    EXPECT_LE(p.total_terminals(), 4);
    EXPECT_LE(p.slots.size(), 2u);
    EXPECT_LE(p.total_edges(), 1);
  }
  EXPECT_EQ(profiles.size(), 2u);
  EXPECT_THROW(enumerate_profiles(1, 1), InputError);
}

TEST(Profiles, CountBound) {
  for (int c = 2; c <= 4; ++c) {
    for (int ell = 1; ell <= 3; ++ell) {
      double bound = 1;
      for (int i = 0; i < c; ++i) bound *= c * ell;
      EXPECT_LE(static_cast<double>(enumerate_profiles(c, ell).size()), bound);
    }
  }
}

TEST(ReduceStep, QuotasMetReturnsImmediately) {
  // Double pendant edges make the bridge the unique minimum cut.
  testing::PendantGraph s;
  s.graph = MultiGraph(6, {Edge{0, 1, 1}, Edge{0, 2, 2}, Edge{0, 3, 2}, Edge{1, 4, 2}, Edge{1, 5, 2}});
  s.terminals = {2, 3, 4, 5};
  auto step = reduce_step(s.graph, s.terminals, ConstrainedSpec{{}, {}, 2, 2, 1});
  EXPECT_EQ(step.outcome, ReductionStep::Outcome::kQuotasMet);
  ASSERT_TRUE(step.immediate);
  EXPECT_EQ(step.immediate->size(), 1);
  EXPECT_TRUE(step.subinstances.empty());
}

TEST(ReduceStep, SubInstancesRespectBudgetAndQuotas) {
  Rng rng(3);
  for (int round = 0; round < 40; ++round) {
    auto pg = testing::random_pendant_graph(rng, 4, 2, 6);
    ConstrainedSpec spec{{}, {}, 3, 2, 2};
    auto step = reduce_step(pg.graph, pg.terminals, spec);
    for (const SubInstance& sub : step.subinstances) {
      ASSERT_GE(sub.spec.budget, 0);
      ASSERT_LE(sub.spec.budget, spec.budget);
      ASSERT_LE(sub.spec.c0, spec.c0);
      ASSERT_LE(sub.spec.c1, spec.c1);
      ASSERT_LT(sub.vertices.size(), static_cast<std::size_t>(pg.graph.num_vertices()));
    }
  }
}

TEST(ReduceStep, NoCutWithinBudget) {
  auto s = star(4);
  auto step = reduce_step(s.graph, s.terminals, ConstrainedSpec{{}, {}, 2, 2, 0});
  EXPECT_EQ(step.outcome, ReductionStep::Outcome::kNoCutWithinBudget);
  EXPECT_TRUE(step.initial_cuts.empty());
}

TEST(ConstrainedCut, SixVertexInstanceMatchesOracle) {
  Rng rng(6);
  for (int round = 0; round < 30; ++round) {
    auto pg = testing::random_pendant_graph(rng, 2, 1, 4, 2);
    ConstrainedSpec spec{{}, {}, 2, 2, 2};
    auto cut = find_constrained_cut(pg.graph, pg.terminals, spec);
    ASSERT_EQ(cut.has_value(), oracle_constrained_cut(pg.graph, pg.terminals, spec).has_value());
  }
}

TEST(ConstrainedCut, MatchesOracleOnRandomSpecs) {
  Rng rng(1234);
  int feasible = 0;
  for (int round = 0; round < 150; ++round) {
    const int inner = static_cast<int>(rng.uniform(2, 7));
    const int pendants = static_cast<int>(rng.uniform(1, 12 - inner));
    auto pg = testing::random_pendant_graph(rng, inner, static_cast<int>(rng.uniform(0, inner)),
                                            pendants, 2, rng.uniform(0, 4) != 0);
    ConstrainedSpec spec;
    for (Vertex v = 0; v < inner; ++v) {
      const auto d = rng.uniform(0, 5);
      if (d == 0) spec.q0.push_back(v);
      if (d == 1) spec.q1.push_back(v);
    }
    spec.c0 = static_cast<int>(rng.uniform(0, 3));
    spec.c1 = static_cast<int>(rng.uniform(0, 3));
    spec.budget = static_cast<int>(rng.uniform(0, 3));
    auto cut = find_constrained_cut(pg.graph, pg.terminals, spec);
    auto expected = oracle_constrained_cut(pg.graph, pg.terminals, spec);
    ASSERT_EQ(cut.has_value(), expected.has_value()) << "round " << round;
    if (cut) {
      ++feasible;
      ASSERT_TRUE(is_valid_constrained_cut(pg.graph, pg.terminals, spec, *cut));
    }
  }
  EXPECT_GT(feasible, 20);
}

}  // namespace
}  // namespace mimic
