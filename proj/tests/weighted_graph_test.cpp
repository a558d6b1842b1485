#include "metric_realize/weighted_graph.hpp"

#include <gtest/gtest.h>

#include <set>

#include "metric_realize/errors.hpp"
#include "test_support.hpp"

namespace metric_realize {
namespace {

using testing::graph_1b;
using testing::Q;

TEST(WeightedGraphTest, NormalizesAndSortsEdges) {
  const auto g = graph_1b(3, {{3, 2, "1"}, {2, 1, "4"}});
  ASSERT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.edges()[0], (Edge<Q>{0, 1, Q(4)}));
  EXPECT_EQ(g.edges()[1], (Edge<Q>{1, 2, Q(1)}));
  EXPECT_EQ(g.weight(2, 1), Q(1));
  EXPECT_FALSE(g.weight(0, 2).has_value());
  EXPECT_EQ(g.degrees(), (std::vector<int>{1, 2, 1}));
}

TEST(WeightedGraphTest, RejectsMalformedEdgeLists) {
  EXPECT_THROW(graph_1b(2, {{1, 1, "1"}}), InvalidInput);
  EXPECT_THROW(graph_1b(2, {{1, 2, "1"}, {2, 1, "3"}}), InvalidInput);
  EXPECT_THROW(graph_1b(2, {{1, 2, "0"}}), InvalidInput);
  EXPECT_THROW(graph_1b(2, {{1, 2, "-1"}}), InvalidInput);
  EXPECT_THROW(graph_1b(2, {{1, 3, "1"}}), InvalidInput);
  EXPECT_THROW(graph_1b(3, {{1, 2, "1"}}), DisconnectedGraph);
  const auto loose = WeightedGraph<Q>::unverified(3, {{0, 1, Q(1)}});
  EXPECT_FALSE(loose.connected());
  EXPECT_THROW(two_weights(loose), DisconnectedGraph);
}

TEST(TwoWeightsTest, TriangleUsesShorterRoute) {
  const auto f = two_weights(graph_1b(3, {{1, 2, "1"}, {2, 3, "1"}, {1, 3, "2"}}));
  EXPECT_EQ(f(0, 1), Q(1));
  EXPECT_EQ(f(1, 2), Q(1));
  EXPECT_EQ(f(0, 2), Q(2));
}

TEST(TwoWeightsTest, SampleCaterpillarSpotValues) {
  const auto f = two_weights(testing::sample_caterpillar());
  EXPECT_EQ(f(0, 11), Q(13));
  EXPECT_EQ(f(3, 5), Q(9, 2));
  EXPECT_EQ(f(2, 13), Q(2));
}

TEST(TwoWeightsTest, SingleEdge) { EXPECT_EQ(two_weights(graph_1b(2, {{1, 2, "5"}}))(0, 1), Q(5)); }

TEST(TwoWeightsTest, MatchesPathEnumeration) {
  Random rng(3);
  for (int round = 0; round < 100; ++round) {
    const int n = static_cast<int>(rng.uniform(2, 7));
    const auto graph = testing::random_connected_graph(rng, n, 0.5);
    const auto family = two_weights(graph);
    const auto oracle = testing::path_enumeration_oracle(graph);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) ASSERT_EQ(family(i, j), *oracle[i][j]) << round;
    }
  }
}

TEST(TwoWeightsTest, SampleCaterpillarMatchesPathEnumeration) {
  const auto graph = testing::sample_caterpillar();
  const auto family = two_weights(graph);
  const auto oracle = testing::path_enumeration_oracle(graph);
  for (int i = 0; i < 18; ++i) {
    for (int j = 0; j < 18; ++j) EXPECT_EQ(family(i, j), *oracle[i][j]);
  }
}

TEST(TwoWeightsTest, SubpathsOfShortestPathsAreShortest) {
  Random rng(4);
  for (int round = 0; round < 200; ++round) {
    const int n = static_cast<int>(rng.uniform(2, 7));
    const auto graph = testing::random_connected_graph(rng, n, 0.5, 1, 6);
    const auto family = two_weights(graph);
    const auto adjacency = graph.adjacency();
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    std::function<void(int, Q)> walk = [&](int v, Q length) {
      const int source = path.front();
      if (length == family(source, v)) {
        std::vector<Q> prefix{Q(0)};
        for (std::size_t k = 1; k < path.size(); ++k) prefix.push_back(prefix.back() + *graph.weight(path[k - 1], path[k]));
        for (std::size_t a = 0; a < path.size(); ++a) {
          for (std::size_t b = a + 1; b < path.size(); ++b) {
            ASSERT_EQ(prefix[b] - prefix[a], family(path[a], path[b]));
          }
        }
      }
      for (const int w : adjacency[v]) {
        if (on_path[w]) continue;
        on_path[w] = true;
        path.push_back(w);
        walk(w, length + *graph.weight(v, w));
        path.pop_back();
        on_path[w] = false;
      }
    };
    for (int s = 0; s < n; ++s) {
      path = {s};
      on_path[s] = true;
      walk(s, Q(0));
      on_path[s] = false;
    }
  }
}

TEST(UsefulEdgesTest, TriangleLongEdgeIsUseless) {
  const auto split = useful_edges(graph_1b(3, {{1, 2, "1"}, {2, 3, "1"}, {1, 3, "2"}}));
  EXPECT_EQ(split.useless, (std::vector<Edge<Q>>{{0, 2, Q(2)}}));
  EXPECT_EQ(split.useful.size(), 2U);
}

TEST(UsefulEdgesTest, OverweightEdgeIsUseless) {
  const auto split = useful_edges(graph_1b(3, {{1, 2, "1"}, {2, 3, "1"}, {1, 3, "5"}}));
  EXPECT_EQ(split.useless, (std::vector<Edge<Q>>{{0, 2, Q(5)}}));
}

TEST(UsefulEdgesTest, TreesAndUnitCompleteGraphsAreAllUseful) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(useful_edges(testing::generated(GraphClass::kTree, 8, seed)).useless.empty());
  }
  std::vector<Edge<Q>> k4;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.push_back({u, v, Q(1)});
  }
  EXPECT_TRUE(useful_edges(WeightedGraph<Q>(4, k4)).useless.empty());
}

TEST(UsefulEdgesTest, MatchesAllPathsDefinition) {
  // An edge is useful iff some pair has all its shortest paths through it.
  Random rng(6);
  for (int round = 0; round < 60; ++round) {
    const int n = static_cast<int>(rng.uniform(3, 6));
    const auto graph = testing::random_connected_graph(rng, n, 0.6, 1, 4);
    const auto family = two_weights(graph);
    const auto adjacency = graph.adjacency();
    std::set<std::pair<int, int>> useful;
    for (const auto& e : graph.edges()) {
      bool required_somewhere = false;
      for (int s = 0; s < n && !required_somewhere; ++s) {
        for (int t = s + 1; t < n && !required_somewhere; ++t) {
          bool every_path_uses_it = true;
          std::vector<bool> on_path(static_cast<std::size_t>(n), false);
          std::function<void(int, Q, bool)> walk = [&](int v, Q length, bool used) {
            if (v == t) {
              if (length == family(s, t) && !used) every_path_uses_it = false;
              return;
            }
            for (const int w : adjacency[v]) {
              if (on_path[w]) continue;
              on_path[w] = true;
              const bool this_edge = (std::min(v, w) == e.u && std::max(v, w) == e.v);
              walk(w, length + *graph.weight(v, w), used || this_edge);
              on_path[w] = false;
            }
          };
          on_path[s] = true;
          walk(s, Q(0), false);
          required_somewhere = every_path_uses_it;
        }
      }
      if (required_somewhere) useful.emplace(e.u, e.v);
    }
    const auto split = useful_edges(graph);
    std::set<std::pair<int, int>> reported;
    for (const auto& e : split.useful) reported.emplace(e.u, e.v);
    ASSERT_EQ(reported, useful) << round;
  }
}

TEST(PruneTest, Examples) {
  EXPECT_EQ(prune(graph_1b(3, {{1, 2, "1"}, {2, 3, "1"}, {1, 3, "2"}})), graph_1b(3, {{1, 2, "1"}, {2, 3, "1"}}));
  std::vector<Edge<Q>> k5;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.push_back({u, v, Q(1)});
  }
  const WeightedGraph<Q> unit_k5(5, k5);
  EXPECT_EQ(prune(unit_k5), unit_k5);
  const auto tree = testing::generated(GraphClass::kTree, 9, 17);
  EXPECT_EQ(prune(tree), tree);
}

TEST(PruneTest, PreservesTwoWeightsAndIsIdempotent) {
  Random rng(12);
  for (int round = 0; round < 200; ++round) {
    const int n = static_cast<int>(rng.uniform(2, 10));
    const auto graph = testing::random_connected_graph(rng, n, 0.5, 1, 10);
    const auto pruned = prune(graph);
    ASSERT_TRUE(pruned.connected());
    ASSERT_EQ(two_weights(pruned), two_weights(graph));
    ASSERT_EQ(prune(pruned), pruned);
    ASSERT_TRUE(useful_edges(pruned).useless.empty());
  }
}

TEST(PruneTest, SimultaneousEqualsOneAtATime) {
  Random rng(13);
  for (int round = 0; round < 100; ++round) {
    const int n = static_cast<int>(rng.uniform(3, 8));
    const auto graph = testing::random_connected_graph(rng, n, 0.6, 1, 5);
    const auto expected = prune(graph);
    for (int trial = 0; trial < 5; ++trial) {
      auto current = graph;
      while (true) {
        const auto useless = useful_edges(current).useless;
        if (useless.empty()) break;
        const auto drop = useless[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(useless.size()) - 1))];
        std::vector<Edge<Q>> kept;
        for (const auto& e : current.edges()) {
          if (!(e == drop)) kept.push_back(e);
        }
        current = WeightedGraph<Q>(n, std::move(kept));
      }
      ASSERT_EQ(current, expected) << round;
    }
  }
}

TEST(VerifyRealizationTest, Examples) {
  const auto caterpillar = testing::sample_caterpillar();
  EXPECT_TRUE(verify_realization(caterpillar, two_weights(caterpillar)));
  const std::vector<Q> perturbed{Q::parse("1.1")};
  EXPECT_FALSE(verify_realization(graph_1b(2, {{1, 2, "1"}}), DistanceFamily<Q>(2, perturbed)));
  EXPECT_THROW(static_cast<void>(verify_realization(graph_1b(2, {{1, 2, "1"}}), two_weights(caterpillar))),
               std::invalid_argument);
  const auto loose = WeightedGraph<Q>::unverified(3, {{0, 1, Q(1)}});
  EXPECT_FALSE(verify_realization(loose, testing::unit_complete_family(3)));
}

TEST(ToleranceModeTest, AbsorbsRoundingInDecimalWeights) {
  std::vector<Edge<double>> edges{{0, 1, 0.1}, {1, 2, 0.2}, {0, 2, 0.3}};
  const WeightedGraph<double> g(3, edges);
  const auto split = useful_edges(g);
  EXPECT_EQ(split.useless.size(), 1U);
  const auto f = two_weights(g);
  EXPECT_TRUE(f.cmp().eq(f(0, 2), 0.3));
  EXPECT_FALSE(is_indecomposable(f, 0, 2));
}

}  // namespace
}  // namespace metric_realize
