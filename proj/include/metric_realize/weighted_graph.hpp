#ifndef METRIC_REALIZE_WEIGHTED_GRAPH_HPP
#define METRIC_REALIZE_WEIGHTED_GRAPH_HPP

#include <optional>
#include <vector>

#include "metric_realize/distance_family.hpp"

namespace metric_realize {

template <class T>
struct Edge {
  int u = 0;
  int v = 0;
  T w{};

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on {0, ..., n-1} with positive edge weights.
/// Edges are stored with u < v, sorted by (u, v).
template <class T>
class WeightedGraph {
 public:
  /// Validates the edge list and requires the graph to be connected.
  /// Throws InvalidInput (self-loop, duplicate, bad index, weight <= 0)
  /// or DisconnectedGraph.
  WeightedGraph(int n, std::vector<Edge<T>> edges);

  /// Same validation without the connectivity requirement. Used for
  /// support graphs, which may be disconnected for invalid families.
  static WeightedGraph unverified(int n, std::vector<Edge<T>> edges);

  int size() const noexcept { return n_; }
  const std::vector<Edge<T>>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool connected() const noexcept { return connected_; }

  std::optional<T> weight(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;

  friend bool operator==(const WeightedGraph& lhs, const WeightedGraph& rhs) {
    return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
  }

 private:
  WeightedGraph() = default;
  void validate();

  int n_ = 0;
  std::vector<Edge<T>> edges_;
  bool connected_ = false;
};

template <class To, class From>
WeightedGraph<To> convert_graph(const WeightedGraph<From>& graph) {
  std::vector<Edge<To>> edges;
  edges.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) edges.push_back({e.u, e.v, convert_number<To>(e.w)});
  return WeightedGraph<To>::unverified(graph.size(), std::move(edges));
}

template <class T>
struct EdgeUsefulness {
  std::vector<Edge<T>> useful;
  std::vector<Edge<T>> useless;
};

/// All-pairs 2-weights (shortest-path weights). Throws DisconnectedGraph.
template <class T>
DistanceFamily<T> two_weights(const WeightedGraph<T>& graph,
                              double tolerance = NumberTraits<T>::kDefaultTolerance);

/// An edge is useful iff its weight equals D(u,v) and D(u,v) is
/// indecomposable in the graph's own 2-weights.
template <class T>
EdgeUsefulness<T> useful_edges(const WeightedGraph<T>& graph,
                               double tolerance = NumberTraits<T>::kDefaultTolerance);

/// Drops every useless edge at once. The result has the same 2-weights.
template <class T>
WeightedGraph<T> prune(const WeightedGraph<T>& graph,
                       double tolerance = NumberTraits<T>::kDefaultTolerance);

/// two_weights(graph) equals family entrywise under the family's
/// comparator. A disconnected graph never realizes a family. Throws
/// std::invalid_argument on a size mismatch.
template <class T>
bool verify_realization(const WeightedGraph<T>& graph, const DistanceFamily<T>& family);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_WEIGHTED_GRAPH_HPP
