#include <gtest/gtest.h>

#include "support.hpp"

namespace mimic {
namespace {

using testing::complete;
using testing::simple;

TEST(BoundedMincut, PathHasOneEdgeCut) {
  auto cut = bounded_mincut(simple(3, {{0, 1}, {1, 2}}), {0}, {2}, 5);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->size(), 1);
  EXPECT_EQ(cut->cutset.size(), 1u);
}

TEST(BoundedMincut, CompleteGraphReachesBound) {
  EXPECT_FALSE(bounded_mincut(complete(4), {0}, {3}, 2));
  EXPECT_EQ(oracle_mincut_bruteforce(complete(4), {0}, {3}), 3);
  EXPECT_TRUE(bounded_mincut(complete(4), {0}, {3}, 4));
}

TEST(BoundedMincut, MultiplicityCounts) {
  MultiGraph g(2, {Edge{0, 1, 2}});
  auto cut = bounded_mincut(g, {0}, {1}, 5);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->size(), 2);
}

TEST(BoundedMincut, RejectsBadQueries) {
  auto g = complete(3);
  EXPECT_THROW(bounded_mincut(g, {0}, {0}, 3), InputError);
  EXPECT_THROW(bounded_mincut(g, {}, {1}, 3), InputError);
  EXPECT_THROW(bounded_mincut(g, {0}, {7}, 3), InputError);
}

TEST(ThresholdedMincut, EmptySideIsZero) {
  EXPECT_EQ(thresholded_mincut(complete(4), {}, {1}, 3), 0);
  EXPECT_EQ(thresholded_mincut(complete(4), {1}, {}, 3), 0);
}

TEST(ThresholdedMincut, CompleteGraphThresholded) {
  EXPECT_EQ(thresholded_mincut(complete(4), {0}, {3}, 2), 2);
}

TEST(ThresholdedMincut, DisconnectedIsZero) {
  auto g = simple(4, {{0, 1}, {2, 3}});
  for (int c = 1; c <= 4; ++c) EXPECT_EQ(thresholded_mincut(g, {0}, {3}, c), 0);
}

TEST(ThresholdedMincut, AgreesWithBruteForceAndIsSymmetric) {
  Rng rng(5);
  for (int round = 0; round < 150; ++round) {
    const int n = static_cast<int>(rng.uniform(2, 9));
    auto g = testing::random_graph(rng, n, static_cast<int>(rng.uniform(0, 2 * n)), 3,
                                   rng.uniform(0, 1) == 1);
    VertexSet a, b;
    for (Vertex v = 0; v < n; ++v) {
      const auto d = rng.uniform(0, 2);
      if (d == 1) a.push_back(v);
      if (d == 2) b.push_back(v);
    }
    const int c = static_cast<int>(rng.uniform(1, 5));
    const int expected = std::min(c, oracle_mincut_bruteforce(g, a, b));
    ASSERT_EQ(thresholded_mincut(g, a, b, c), expected);
    ASSERT_EQ(thresholded_mincut(g, b, a, c), expected);
    if (!a.empty() && !b.empty()) {
      auto cut = bounded_mincut(g, a, b, c);
      ASSERT_EQ(cut.has_value(), expected < c);
      if (cut) {
        ASSERT_EQ(cut->size(), expected);
        for (Vertex v : a) ASSERT_TRUE(contains(cut->side0, v));
        for (Vertex v : b) ASSERT_TRUE(contains(cut->side1, v));
      }
    }
  }
}

TEST(FurthestMincutSide, PathTakesTheFarCut) {
  auto side = furthest_mincut_side(simple(3, {{0, 1}, {1, 2}}), {0}, {2}, 3);
  ASSERT_TRUE(side);
  EXPECT_EQ(*side, (VertexSet{0, 1}));
}

}  // namespace
}  // namespace mimic
