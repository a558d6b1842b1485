#include "metric_realize/cyclic_recognizers.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace metric_realize {
namespace {

using testing::graph_1b;
using testing::Q;

DistanceFamily<Q> heavy_square_family() {
  return two_weights(graph_1b(4, {{1, 2, "1"}, {2, 3, "1"}, {3, 4, "1"}, {1, 4, "10"}}));
}

TEST(PolygonOrderTest, UnitPentagonWalksAroundTheCycle) {
  const auto walked = polygon_order(testing::unit_cycle_family(5));
  ASSERT_TRUE(std::holds_alternative<PolygonOrder>(walked));
  const auto& order = std::get<PolygonOrder>(walked);
  EXPECT_TRUE(order.complete);
  EXPECT_EQ(canonical_cycle(order.order), (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(PolygonOrderTest, UnitSquare) {
  const auto walked = polygon_order(testing::unit_cycle_family(4));
  const auto& order = std::get<PolygonOrder>(walked);
  EXPECT_TRUE(order.complete);
  EXPECT_EQ(order.order, (std::vector<int>{0, 1, 2, 3}));
}

TEST(PolygonOrderTest, ChordVertexHasThreePartners) {
  const auto chorded =
      graph_1b(6, {{1, 2, "1"}, {2, 3, "1"}, {3, 4, "1"}, {4, 5, "1"}, {5, 6, "1"}, {6, 1, "1"}, {1, 4, "1"}});
  const auto walked = polygon_order(two_weights(chorded));
  ASSERT_TRUE(std::holds_alternative<Rejection>(walked));
  const auto& rejection = std::get<Rejection>(walked);
  EXPECT_EQ(rejection.condition, "partner-count");
  EXPECT_EQ(rejection.indices, (std::vector<int>{0}));
}

TEST(PolygonOrderTest, CompleteWalkFollowsTheSupportGraph) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const auto family = two_weights(testing::generated(GraphClass::kPrunedPolygon, n, seed));
    const auto walked = polygon_order(family);
    const auto& walk = std::get<PolygonOrder>(walked);
    ASSERT_TRUE(walk.complete);
    auto sorted = walk.order;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < n; ++v) ASSERT_EQ(sorted[v], v);
    const auto support = support_graph(family);
    ASSERT_EQ(support.edge_count(), static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      ASSERT_TRUE(support.weight(walk.order[k], walk.order[(k + 1) % n]).has_value());
    }
  }
}

TEST(CanonicalCycleTest, RotatesAndReflects) {
  EXPECT_EQ(canonical_cycle({3, 1, 4, 0, 2}), (std::vector<int>{0, 2, 3, 1, 4}));
  EXPECT_EQ(canonical_cycle({2, 0, 1}), (std::vector<int>{0, 1, 2}));
}

TEST(PrunedPolygonCheckTest, UnitPentagonAndSquare) {
  for (const int n : {4, 5}) {
    const auto result = pruned_polygon_check(testing::unit_cycle_family(n));
    ASSERT_TRUE(result.accepted());
    EXPECT_EQ(result.graph->edge_count(), static_cast<std::size_t>(n));
    for (const auto& e : result.graph->edges()) {
      EXPECT_EQ(e.w, Q(1));
      EXPECT_TRUE(e.v - e.u == 1 || (e.u == 0 && e.v == n - 1));
    }
  }
}

TEST(PrunedPolygonCheckTest, HeavySquareIsNotPruned) {
  const auto family = heavy_square_family();
  EXPECT_EQ(family(0, 3), Q(3));
  const auto result = pruned_polygon_check(family);
  ASSERT_FALSE(result.accepted());
  EXPECT_EQ(result.rejection->condition, "partner-count");
}

TEST(PrunedPolygonCheckTest, TwoPartnersSufficeUnderTriangleInequalities) {
  // The support graph realizes any family satisfying the triangle
  // inequalities, so once every vertex has two partners the walk is
  // complete and the arc equation holds.
  Random rng(41);
  int two_partner_families = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = static_cast<int>(rng.uniform(3, 8));
    const auto family = two_weights(testing::random_connected_graph(rng, n, 0.2, 1, 6));
    const auto degrees = support_graph(family).degrees();
    const bool two_partners = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 2; });
    two_partner_families += two_partners ? 1 : 0;
    const auto result = pruned_polygon_check(family);
    ASSERT_EQ(result.accepted(), two_partners) << round;
    if (!two_partners) ASSERT_EQ(result.rejection->condition, "partner-count");
  }
  EXPECT_GT(two_partner_families, 10);
}

TEST(PrunedPolygonCheckTest, TriangleViolationIsReported) {
  const auto family = testing::family_1b<Q>(4, [](int i, int j) { return (i == 1 && j == 3) ? Q(5) : Q(1); });
  const auto result = pruned_polygon_check(family);
  ASSERT_FALSE(result.accepted());
  EXPECT_EQ(result.rejection->condition, "triangle");
}

TEST(PolygonCheckTest, HeavySquareClosesTheSnake) {
  const auto family = heavy_square_family();
  const auto result = polygon_check(family);
  ASSERT_TRUE(result.accepted());
  EXPECT_EQ(result.graph->weight(0, 3), Q(3));
  EXPECT_EQ(result.graph->edge_count(), 4U);
  EXPECT_TRUE(verify_realization(*result.graph, family));
}

TEST(PolygonCheckTest, PentagonUsesThePrunedBranch) {
  const auto result = polygon_check(testing::unit_cycle_family(5));
  ASSERT_TRUE(result.accepted());
  EXPECT_EQ(*result.graph, *pruned_polygon_check(testing::unit_cycle_family(5)).graph);
}

TEST(PolygonCheckTest, StarAndTinyFamiliesAreRejected) {
  EXPECT_FALSE(polygon_check(testing::unit_star_family(3)).accepted());
  const std::vector<Q> one{Q(1)};
  const auto tiny = polygon_check(DistanceFamily<Q>(2, one));
  ASSERT_FALSE(tiny.accepted());
  EXPECT_EQ(tiny.rejection->condition, "size");
}

TEST(PolygonRecognizerProperty, RandomCyclesRoundTrip) {
  Random rng(31);
  for (int round = 0; round < 200; ++round) {
    const int n = static_cast<int>(rng.uniform(3, 12));
    const auto order = rng.permutation(n);
    std::vector<Edge<Q>> edges;
    for (int k = 0; k < n; ++k) edges.push_back({order[k], order[(k + 1) % n], Q(rng.uniform(1, 20))});
    const WeightedGraph<Q> cycle(n, edges);
    const auto family = two_weights(cycle);
    const auto result = polygon_check(family);
    ASSERT_TRUE(result.accepted()) << round;
    ASSERT_TRUE(verify_realization(*result.graph, family));
    if (useful_edges(cycle).useless.empty()) {
      const auto pruned = pruned_polygon_check(family);
      ASSERT_TRUE(pruned.accepted()) << round;
      ASSERT_EQ(*pruned.graph, cycle) << round;
    }
  }
}

}  // namespace
}  // namespace metric_realize
