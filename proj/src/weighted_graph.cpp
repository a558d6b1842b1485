#include "metric_realize/weighted_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "metric_realize/errors.hpp"

namespace metric_realize {
namespace {

std::string pair_name(int u, int v) { return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")"; }

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

template <class T>
WeightedGraph<T>::WeightedGraph(int n, std::vector<Edge<T>> edges) : n_(n), edges_(std::move(edges)) {
  validate();
  if (!connected_) throw DisconnectedGraph("graph is not connected");
}

template <class T>
WeightedGraph<T> WeightedGraph<T>::unverified(int n, std::vector<Edge<T>> edges) {
  WeightedGraph graph;
  graph.n_ = n;
  graph.edges_ = std::move(edges);
  graph.validate();
  return graph;
}

template <class T>
void WeightedGraph<T>::validate() {
  if (n_ < 1) throw InvalidInput("a graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw InvalidInput("edge " + pair_name(e.u, e.v) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u + 1));
    if (!(e.w > T(0))) throw InvalidInput("nonpositive weight on edge " + pair_name(e.u, e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge<T>& a, const Edge<T>& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw InvalidInput("duplicate edge " + pair_name(edges_[k].u, edges_[k].v));
    }
  }
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  int components = n_;
  for (const auto& e : edges_) {
    const int a = find_root(parent, e.u);
    const int b = find_root(parent, e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  connected_ = components == 1;
}

template <class T>
std::optional<T> WeightedGraph<T>::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                                   [](const Edge<T>& e, const std::pair<int, int>& key) {
                                     return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                                   });
  if (it != edges_.end() && it->u == u && it->v == v) return it->w;
  return std::nullopt;
}

template <class T>
std::vector<std::vector<int>> WeightedGraph<T>::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

template <class T>
std::vector<int> WeightedGraph<T>::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

template <class T>
DistanceFamily<T> two_weights(const WeightedGraph<T>& graph, double tolerance) {
  if (!graph.connected()) throw DisconnectedGraph("2-weights need a connected graph");
  const int n = graph.size();
  if (n < 2) throw InvalidInput("2-weights need at least 2 vertices");
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j); };
  std::vector<T> dist(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), T(0));
  std::vector<char> known(dist.size(), 0);
  for (int i = 0; i < n; ++i) known[idx(i, i)] = 1;
  for (const auto& e : graph.edges()) {
    dist[idx(e.u, e.v)] = e.w;
    dist[idx(e.v, e.u)] = e.w;
    known[idx(e.u, e.v)] = known[idx(e.v, e.u)] = 1;
  }
  // Floyd-Warshall. Only distances are consumed, so path ties are irrelevant.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!known[idx(i, k)] || i == k) continue;
      for (int j = 0; j < n; ++j) {
        if (!known[idx(k, j)] || j == k || j == i) continue;
        T through = dist[idx(i, k)] + dist[idx(k, j)];
        if (!known[idx(i, j)] || through < dist[idx(i, j)]) {
          dist[idx(i, j)] = std::move(through);
          known[idx(i, j)] = 1;
        }
      }
    }
  }
  return DistanceFamily<T>::from_function(n, [&](int i, int j) { return dist[idx(i, j)]; }, tolerance);
}

template <class T>
EdgeUsefulness<T> useful_edges(const WeightedGraph<T>& graph, double tolerance) {
  const auto family = two_weights(graph, tolerance);
  EdgeUsefulness<T> result;
  for (const auto& e : graph.edges()) {
    if (family.cmp().eq(e.w, family(e.u, e.v)) && is_indecomposable(family, e.u, e.v)) {
      result.useful.push_back(e);
    } else {
      result.useless.push_back(e);
    }
  }
  return result;
}

template <class T>
WeightedGraph<T> prune(const WeightedGraph<T>& graph, double tolerance) {
  return WeightedGraph<T>(graph.size(), useful_edges(graph, tolerance).useful);
}

template <class T>
bool verify_realization(const WeightedGraph<T>& graph, const DistanceFamily<T>& family) {
  if (graph.size() != family.size()) {
    throw std::invalid_argument("graph has " + std::to_string(graph.size()) + " vertices, family has " +
                                std::to_string(family.size()));
  }
  if (!graph.connected()) return false;
  const auto realized = two_weights(graph, family.tolerance());
  const int n = family.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!family.cmp().eq(realized(i, j), family(i, j))) return false;
    }
  }
  return true;
}

#define METRIC_REALIZE_INSTANTIATE(T)                                                   \
  template class WeightedGraph<T>;                                                      \
  template DistanceFamily<T> two_weights(const WeightedGraph<T>&, double);              \
  template EdgeUsefulness<T> useful_edges(const WeightedGraph<T>&, double);             \
  template WeightedGraph<T> prune(const WeightedGraph<T>&, double);                     \
  template bool verify_realization(const WeightedGraph<T>&, const DistanceFamily<T>&);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize
