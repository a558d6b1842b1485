#include "metric_realize/tree_recognizers.hpp"

#include <gtest/gtest.h>

#include "metric_realize/errors.hpp"
#include "test_support.hpp"

namespace metric_realize {
namespace {

using testing::graph_1b;
using testing::Q;

DistanceFamily<Q> spider_family() {
  return two_weights(graph_1b(7, {{1, 2, "1"}, {2, 3, "1"}, {1, 4, "1"}, {4, 5, "1"}, {1, 6, "1"}, {6, 7, "1"}}));
}

/// Perturbs one entry by +10%.
DistanceFamily<Q> bumped(const DistanceFamily<Q>& family, int i, int j) {
  return DistanceFamily<Q>::from_function(family.size(), [&](int a, int b) {
    const Q value = family(a, b);
    return (a == std::min(i, j) && b == std::max(i, j)) ? value + value / Q(10) : value;
  });
}

TEST(SnakeCheckTest, PathIsRegenerated) {
  const auto path = graph_1b(4, {{1, 2, "1"}, {2, 3, "2"}, {3, 4, "3"}});
  const auto result = snake_check(two_weights(path));
  ASSERT_TRUE(result.accepted());
  EXPECT_EQ(*result.graph, path);
}

TEST(SnakeCheckTest, TwoPointsAlwaysAccepted) {
  const std::vector<Q> seven{Q(7)};
  const auto result = snake_check(DistanceFamily<Q>(2, seven));
  ASSERT_TRUE(result.accepted());
  EXPECT_EQ(*result.graph, graph_1b(2, {{1, 2, "7"}}));
}

TEST(SnakeCheckTest, StarIsRejectedWithTheFailingPair) {
  const auto result = snake_check(testing::unit_star_family(3));
  ASSERT_FALSE(result.accepted());
  EXPECT_EQ(result.rejection->condition, "snake");
}

TEST(SnakeCheckTest, LabelsNeedNotFollowThePath) {
  const auto path = graph_1b(5, {{3, 5, "2"}, {5, 1, "1"}, {1, 4, "7"}, {4, 2, "0.5"}});
  const auto result = snake_check(two_weights(path));
  ASSERT_TRUE(result.accepted());
  EXPECT_EQ(*result.graph, path);
}

TEST(PendantOffsetsTest, SampleCaterpillarValues) {
  const auto stats = pendant_offsets(two_weights(testing::sample_caterpillar()));
  EXPECT_EQ(stats.t[0], Q(2));
  EXPECT_EQ(stats.t[1], Q(0));
  EXPECT_EQ(stats.t[7], Q(21, 10));
}

TEST(PendantOffsetsTest, SmallExamples) {
  const auto path = pendant_offsets(two_weights(graph_1b(3, {{1, 2, "1"}, {2, 3, "2"}})));
  EXPECT_EQ(path.t[1], Q(0));
  const auto star = pendant_offsets(testing::unit_star_family(3));
  EXPECT_EQ(star.t, (std::vector<Q>{Q(0), Q(1), Q(1), Q(1)}));
  const std::vector<Q> one{Q(1)};
  EXPECT_THROW(pendant_offsets(DistanceFamily<Q>(2, one)), InvalidInput);
}

TEST(PendantOffsetsTest, MatchesExhaustiveMinimumAndMaximum) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto family = two_weights(testing::generated(GraphClass::kTree, 7, seed));
    const auto stats = pendant_offsets(family);
    Q best_score(0);
    std::pair<int, int> best{-1, -1};
    for (int x = 0; x < 7; ++x) {
      std::optional<Q> low;
      for (int y = 0; y < 7; ++y) {
        for (int z = 0; z < 7; ++z) {
          if (y == x || z == x || y == z) continue;
          const Q value = family(x, y) + family(x, z) - family(y, z);
          if (!low || value < *low) low = value;
        }
      }
      ASSERT_EQ(stats.t[x], *low / Q(2));
    }
    for (int a = 0; a < 7; ++a) {
      for (int b = a + 1; b < 7; ++b) {
        const Q score = family(a, b) - stats.t[a] - stats.t[b];
        if (best.first < 0 || score > best_score) {
          best_score = score;
          best = {a, b};
        }
      }
    }
    ASSERT_EQ(stats.extremal_pair, best);
  }
}

TEST(CaterpillarCheckTest, SampleCaterpillarRoundTrip) {
  const auto caterpillar = testing::sample_caterpillar();
  const auto family = two_weights(caterpillar);
  const auto result = caterpillar_check(family);
  ASSERT_TRUE(result.accepted());
  EXPECT_EQ(two_weights(*result.graph), family);
  EXPECT_EQ(*result.graph, caterpillar);
}

TEST(CaterpillarCheckTest, SnakesAreCaterpillars) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto family = two_weights(testing::generated(GraphClass::kSnake, 2 + static_cast<int>(seed % 10), seed));
    ASSERT_TRUE(caterpillar_check(family).accepted()) << seed;
  }
}

TEST(CaterpillarCheckTest, SpiderFailsTheExtremalInequality) {
  const auto result = caterpillar_check(spider_family());
  ASSERT_FALSE(result.accepted());
  EXPECT_EQ(result.rejection->condition, "caterpillar-extremal");
  EXPECT_TRUE(tree_check(spider_family()).accepted());
}

TEST(CaterpillarCheckTest, NonTreeFamiliesFailEarlierConditions) {
  EXPECT_EQ(caterpillar_check(testing::unit_cycle_family(4)).rejection->condition, "four-point");
  EXPECT_EQ(caterpillar_check(testing::unit_complete_family(3)).rejection->condition, "median");
}

TEST(CaterpillarCheckTest, OffsetsVanishExactlyOnTheSpine) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const auto graph = testing::generated(GraphClass::kCaterpillar, n, seed);
    const auto stats = pendant_offsets(two_weights(graph));
    const auto degree = graph.degrees();
    for (int v = 0; v < n; ++v) {
      if (degree[v] >= 2) {
        ASSERT_EQ(stats.t[v], Q(0)) << seed;
      } else {
        const int neighbour = graph.adjacency()[v][0];
        ASSERT_EQ(stats.t[v], *graph.weight(v, neighbour)) << seed;
      }
    }
  }
}

TEST(CaterpillarCheckTest, ExtremalPairSitsAtTheSpineEnds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const auto graph = testing::generated(GraphClass::kCaterpillar, n, seed);
    const auto degree = graph.degrees();
    const auto adjacency = graph.adjacency();
    const auto spine_end = [&](int v) {
      if (degree[v] < 2) return false;
      int spine_neighbours = 0;
      for (const int w : adjacency[v]) spine_neighbours += degree[w] >= 2 ? 1 : 0;
      return spine_neighbours <= 1;
    };
    const auto near_end = [&](int v) {
      if (spine_end(v)) return true;
      return degree[v] == 1 && spine_end(adjacency[v][0]);
    };
    const auto [a, b] = pendant_offsets(two_weights(graph)).extremal_pair;
    ASSERT_TRUE(near_end(a) && near_end(b)) << seed;
  }
}

TEST(TreeCheckTest, StarRecoversTheStar) {
  const auto result = tree_check(testing::unit_star_family(3));
  ASSERT_TRUE(result.accepted());
  EXPECT_EQ(*result.graph, graph_1b(4, {{1, 2, "1"}, {1, 3, "1"}, {1, 4, "1"}}));
}

TEST(TreeCheckTest, SquareFailsFourPoint) {
  const auto result = tree_check(testing::unit_cycle_family(4));
  ASSERT_FALSE(result.accepted());
  EXPECT_EQ(result.rejection->condition, "four-point");
  EXPECT_EQ(result.rejection->indices, (std::vector<int>{0, 1, 2, 3}));
}

TEST(TreeCheckTest, SampleCaterpillarRecoveredExactly) {
  const auto caterpillar = testing::sample_caterpillar();
  const auto result = tree_check(two_weights(caterpillar));
  ASSERT_TRUE(result.accepted());
  EXPECT_EQ(*result.graph, caterpillar);
}

TEST(TreeRecognizerProperty, RoundTripsAndContainment) {
  for (const GraphClass cls : {GraphClass::kSnake, GraphClass::kCaterpillar, GraphClass::kTree}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int n = 2 + static_cast<int>(seed % 11);
      const auto graph = testing::generated(cls, n, seed);
      const auto family = two_weights(graph);
      const auto snake = snake_check(family);
      const auto caterpillar = caterpillar_check(family);
      const auto tree = tree_check(family);
      const auto& own = cls == GraphClass::kSnake ? snake : cls == GraphClass::kCaterpillar ? caterpillar : tree;
      ASSERT_TRUE(own.accepted()) << class_name(cls) << " seed " << seed;
      ASSERT_TRUE(verify_realization(*own.graph, family));
      ASSERT_EQ(*own.graph, graph) << "tree realizations are unique";
      if (snake.accepted()) ASSERT_TRUE(caterpillar.accepted());
      if (caterpillar.accepted()) ASSERT_TRUE(tree.accepted());
    }
  }
}

TEST(TreeRecognizerProperty, PerturbationNeverYieldsAnUnverifiedGraph) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const auto family = two_weights(testing::generated(GraphClass::kCaterpillar, n, seed));
    Random rng(seed);
    const int i = static_cast<int>(rng.uniform(0, n - 1));
    int j = static_cast<int>(rng.uniform(0, n - 2));
    if (j >= i) ++j;
    const auto changed = bumped(family, i, j);
    for (const auto& result : {snake_check(changed), caterpillar_check(changed), tree_check(changed)}) {
      if (result.accepted()) ASSERT_TRUE(verify_realization(*result.graph, changed));
    }
  }
}

TEST(TreeRecognizerProperty, ToleranceModeMatchesExactOnDecimalWeights) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenSpec spec;
    spec.cls = GraphClass::kCaterpillar;
    spec.n = 3 + static_cast<int>(seed % 10);
    spec.seed = seed;
    spec.weights.kind = WeightModel::Kind::kDecimalGrid;
    const auto graph = generate(spec);
    const auto floating = convert_graph<double>(graph);
    const auto result = caterpillar_check(two_weights(floating));
    ASSERT_TRUE(result.accepted()) << seed;
    ASSERT_EQ(result.graph->edge_count(), graph.edge_count());
  }
}

}  // namespace
}  // namespace metric_realize
