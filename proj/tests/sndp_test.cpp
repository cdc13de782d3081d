#include <gtest/gtest.h>

#include "support.hpp"

namespace mimic {
namespace {

using testing::capacitated;

std::vector<std::pair<Vertex, Vertex>> pairs_of(const SndpInstance& inst) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : inst.edges) out.emplace_back(e.u, e.v);
  return out;
}

bool demands_hold(const SndpInstance& inst, const std::vector<int>& chosen) {
  auto g = selected_graph(inst, chosen);
  for (const Demand& d : inst.demands) {
    if (d.vertex == inst.root) continue;
    if (oracle_mincut_bruteforce(g, {inst.root}, {d.vertex}) < d.requirement) return false;
  }
  return true;
}

TEST(Decomposition, PathHasWidthOne) {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}};
  auto raw = elimination_decomposition(4, edges);
  EXPECT_NO_THROW(validate_raw_decomposition(4, edges, raw));
  int width = 0;
  for (const auto& b : raw.bags) width = std::max(width, static_cast<int>(b.size()) - 1);
  EXPECT_EQ(width, 1);
  auto td = prepare_decomposition(4, edges, 0);
  EXPECT_EQ(check_normalized(td, 4, edges, 0), "");
}

TEST(Decomposition, TreeWithRootHasSmallBags) {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}};
  auto td = prepare_decomposition(6, edges, 3);
  EXPECT_LE(td.width(), 2);
  EXPECT_EQ(check_normalized(td, 6, edges, 3), "");
}

TEST(Decomposition, NodeWithThreeChildrenIsBinarized) {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}};
  RawDecomposition raw{{{0}, {0, 1}, {0, 2}, {0, 3}}, {{0, 1}, {0, 2}, {0, 3}}};
  auto td = prepare_decomposition(4, edges, 0, raw);
  EXPECT_EQ(check_normalized(td, 4, edges, 0), "");
  for (const auto& ch : td.children) EXPECT_TRUE(ch.empty() || ch.size() == 2);
  for (const VertexSet& want : raw.bags) {
    bool found = false;
    for (const VertexSet& bag : td.bags) found = found || bag == set_union(want, {0});
    EXPECT_TRUE(found);
  }
}

TEST(Decomposition, AxiomViolationsAreNamed) {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}};
  RawDecomposition missing_edge{{{0, 1}, {2}}, {{0, 1}}};
  try {
    validate_raw_decomposition(3, edges, missing_edge);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("axiom"), std::string::npos);
  }
  RawDecomposition cycle{{{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}};
  EXPECT_THROW(validate_raw_decomposition(3, edges, cycle), InputError);
}

TEST(Signature, EmptyGraphIsAllZero) {
  auto sig = state_signature(MultiGraph(3), {0, 1, 2}, 2);
  EXPECT_EQ(sig.values.size(), 27u);
  for (auto v : sig.values) EXPECT_EQ(v, 0);
}

TEST(Signature, CompleteGraphMatchesBruteForce) {
  std::vector<Edge> edges;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) edges.push_back(Edge{u, v, 2});
  }
  MultiGraph g(4, edges);
  const int c = 3;
  auto sig = state_signature(g, {0, 1, 2, 3}, c);
  for (std::size_t code = 0; code < sig.values.size(); ++code) {
    VertexSet a, b;
    std::size_t x = code;
    for (Vertex v = 0; v < 4; ++v, x /= 3) {
      if (x % 3 == 1) a.push_back(v);
      if (x % 3 == 2) b.push_back(v);
    }
    const int want = a.empty() || b.empty() ? 0 : std::min(c, oracle_mincut_bruteforce(g, a, b));
    ASSERT_EQ(sig.values[code], want);
  }
}

TEST(Signature, ContractingALinkedSetKeepsIt) {
  // A 4-cycle 0-1-2-3 with a chord; contracting {1, 3}'s neighbourhood is not
  // needed: contract the linked pair {1, 2} joined by a double edge.
  MultiGraph g(4, {Edge{0, 1, 1}, Edge{1, 2, 2}, Edge{2, 3, 1}, Edge{3, 0, 1}});
  auto pv = pendant_view(g, {1, 2});
  ASSERT_TRUE(oracle_is_linked(pv.graph, pv.terminals, 2));
  auto c = contract(g, {1, 2});
  EXPECT_EQ(state_signature(g, {0, 3}, 2), state_signature(c.graph, {c.map(0), c.map(3)}, 2));
}

TEST(Sndp, NoDemands) {
  SndpInstance inst{3, capacitated({{0, 1, 3}, {1, 2, 3}}), 0, {}};
  auto r = solve_sndp(inst, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->solution.cost, 0);
  EXPECT_TRUE(r->solution.edges.empty());
}

TEST(Sndp, SingleDemandIsShortestPath) {
  SndpInstance inst{5, capacitated({{0, 1, 1}, {1, 4, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 3}}),
                    0, {Demand{4, 1}}};
  auto r = solve_sndp(inst, 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->solution.cost, 2);
  EXPECT_EQ(r->solution.edges, (std::vector<int>{0, 1}));
}

TEST(Sndp, BridgeBlocksTwoConnectivity) {
  SndpInstance inst{4, capacitated({{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 3, 1}}), 0, {Demand{3, 2}}};
  EXPECT_FALSE(solve_sndp(inst, 2));
}

TEST(Sndp, SteinerTreeOnATree) {
  SndpInstance inst{6, capacitated({{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 5, 1}}), 0,
                    {Demand{3, 1}, Demand{4, 1}}};
  auto r = solve_sndp(inst, 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->solution.cost, 3);
  EXPECT_EQ(r->solution.cost, oracle_sndp(inst, 1)->cost);
}

TEST(Sndp, RejectsBadInstances) {
  SndpInstance inst{3, capacitated({{0, 1, 1}}), 0, {Demand{1, 3}}};
  EXPECT_THROW(solve_sndp(inst, 2), InputError);
  inst.demands = {Demand{5, 1}};
  EXPECT_THROW(solve_sndp(inst, 2), InputError);
}

TEST(Sndp, MatchesOracleOnRandomInstances) {
  int feasible = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(3, 8));
    const int m = static_cast<int>(rng.uniform(n - 1, std::min(2 * n - 3, 12)));
    const int c = static_cast<int>(rng.uniform(1, 2));
    auto inst = generate_sndp_instance(n, m, static_cast<int>(rng.uniform(0, 3)), c, seed).sndp();
    auto r = solve_sndp(inst, c);
    auto want = oracle_sndp(inst, c);
    ASSERT_EQ(r.has_value(), want.has_value()) << "seed " << seed;
    if (!r) continue;
    ++feasible;
    ASSERT_EQ(r->solution.cost, want->cost) << "seed " << seed;
    ASSERT_TRUE(demands_hold(inst, r->solution.edges));
  }
  EXPECT_GT(feasible, 10);
}

TEST(Sndp, TraceMatchesLocalSignatures) {
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    auto inst = generate_sndp_instance(7, 9, 3, 2, seed).sndp();
    auto td = prepare_decomposition(inst.num_vertices, pairs_of(inst), inst.root);
    auto r = solve_sndp(inst, td, 2);
    if (!r) continue;
    ASSERT_EQ(r->trace.size(), static_cast<std::size_t>(td.num_nodes()));
    std::vector<char> chosen(inst.edges.size(), 0);
    for (int e : r->solution.edges) chosen[static_cast<std::size_t>(e)] = 1;
    // below[t]: chosen edges introduced in the subtree of t.
    std::vector<std::vector<int>> below(static_cast<std::size_t>(td.num_nodes()));
    for (int t : td.post_order()) {
      auto& mine = below[static_cast<std::size_t>(t)];
      for (int e : td.edges[static_cast<std::size_t>(t)]) {
        if (chosen[static_cast<std::size_t>(e)]) mine.push_back(e);
      }
      for (int ch : td.children[static_cast<std::size_t>(t)]) {
        const auto& sub = below[static_cast<std::size_t>(ch)];
        mine.insert(mine.end(), sub.begin(), sub.end());
      }
    }
    for (int t = 0; t < td.num_nodes(); ++t) {
      auto inside = below[static_cast<std::size_t>(t)];
      std::sort(inside.begin(), inside.end());
      std::vector<int> outside;
      for (int e : r->solution.edges) {
        if (!std::binary_search(inside.begin(), inside.end(), e)) outside.push_back(e);
      }
      const VertexSet& bag = td.bags[static_cast<std::size_t>(t)];
      ASSERT_EQ(state_signature(selected_graph(inst, inside), bag, 2), r->trace[static_cast<std::size_t>(t)].gamma)
          << "seed " << seed << " node " << t;
      ASSERT_EQ(state_signature(selected_graph(inst, outside), bag, 2), r->trace[static_cast<std::size_t>(t)].delta)
          << "seed " << seed << " node " << t;
    }
  }
}

}  // namespace
}  // namespace mimic
