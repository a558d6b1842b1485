#include "metric_realize/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "metric_realize/errors.hpp"
#include "metric_realize/planar.hpp"

namespace metric_realize {

std::int64_t Random::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % range);
}

bool Random::coin(double probability) { return static_cast<double>(uniform(0, 999'999)) < probability * 1e6; }

std::vector<int> Random::permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[static_cast<std::size_t>(uniform(0, i))]);
  return p;
}

std::vector<std::pair<int, int>> pruefer_tree_edges(const std::vector<int>& sequence, int n) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (const int v : sequence) ++degree[v];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (const int v : sequence) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
        break;
      }
    }
  }
  int u = -1;
  for (int w = 0; w < n; ++w) {
    if (degree[w] == 1) {
      if (u < 0) {
        u = w;
      } else {
        edges.emplace_back(u, w);
        break;
      }
    }
  }
  return edges;
}

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Pairs random_tree(Random& rng, int n) {
  if (n == 2) return {{0, 1}};
  std::vector<int> sequence;
  for (int i = 0; i < n - 2; ++i) sequence.push_back(static_cast<int>(rng.uniform(0, n - 1)));
  return pruefer_tree_edges(sequence, n);
}

Pairs path_on(const std::vector<int>& order) {
  Pairs edges;
  for (std::size_t i = 1; i < order.size(); ++i) edges.emplace_back(order[i - 1], order[i]);
  return edges;
}

bool connected_without(int n, const Pairs& edges, std::size_t skip) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k == skip) continue;
    adj[edges[k].first].push_back(edges[k].second);
    adj[edges[k].second].push_back(edges[k].first);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

Pairs random_planar(Random& rng, int n) {
  if (n == 2) return {{0, 1}};
  const auto p = rng.permutation(n);
  Pairs edges{{p[0], p[1]}, {p[1], p[2]}, {p[0], p[2]}};
  std::vector<std::array<int, 3>> faces{{p[0], p[1], p[2]}, {p[0], p[1], p[2]}};
  for (int k = 3; k < n; ++k) {
    const int v = p[k];
    const auto f = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(faces.size()) - 1));
    const auto [a, b, c] = faces[f];
    edges.insert(edges.end(), {{a, v}, {b, v}, {c, v}});
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  // Random deletions that keep the graph connected.
  const auto order = rng.permutation(static_cast<int>(edges.size()));
  std::vector<bool> removed(edges.size(), false);
  for (const int k : order) {
    if (!rng.coin(0.5)) continue;
    Pairs kept;
    std::size_t skip = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (removed[i]) continue;
      if (static_cast<int>(i) == k) skip = kept.size();
      kept.push_back(edges[i]);
    }
    if (connected_without(n, kept, skip)) removed[static_cast<std::size_t>(k)] = true;
  }
  Pairs result;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!removed[i]) result.push_back(edges[i]);
  }
  return result;
}

/// Complete instances split the vertices evenly; sparse ones draw the
/// side sizes.
Pairs random_bipartite(Random& rng, int n, bool complete) {
  const int x_count = complete ? n / 2 : static_cast<int>(rng.uniform(1, n - 1));
  const auto p = rng.permutation(n);
  const std::vector<int> xs(p.begin(), p.begin() + x_count);
  const std::vector<int> ys(p.begin() + x_count, p.end());
  Pairs edges;
  if (complete) {
    for (const int a : xs) {
      for (const int b : ys) edges.emplace_back(a, b);
    }
    return edges;
  }
  std::vector<int> placed_x{xs[0]};
  std::vector<int> placed_y{ys[0]};
  edges.emplace_back(xs[0], ys[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    edges.emplace_back(xs[i], placed_y[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(placed_y.size()) - 1))]);
    placed_x.push_back(xs[i]);
  }
  for (std::size_t i = 1; i < ys.size(); ++i) {
    edges.emplace_back(ys[i], placed_x[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(placed_x.size()) - 1))]);
  }
  const double density = static_cast<double>(rng.uniform(1, 6)) / 10.0;
  for (const int a : xs) {
    for (const int b : ys) {
      const bool present = std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
        return (e.first == a && e.second == b) || (e.first == b && e.second == a);
      });
      if (!present && rng.coin(density)) edges.emplace_back(a, b);
    }
  }
  return edges;
}

Pairs random_connected(Random& rng, int n) {
  Pairs edges = random_tree(rng, n);
  std::vector<std::vector<bool>> present(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const auto& [u, v] : edges) present[u][v] = present[v][u] = true;
  const double density = static_cast<double>(rng.uniform(1, 6)) / 10.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present[u][v] && rng.coin(density)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Pairs class_structure(Random& rng, GraphClass cls, int n) {
  switch (cls) {
    case GraphClass::kSnake:
      return path_on(rng.permutation(n));
    case GraphClass::kCaterpillar: {
      if (n == 2) return {{0, 1}};
      const auto p = rng.permutation(n);
      const int spine = static_cast<int>(rng.uniform(1, n));
      Pairs edges = path_on(std::vector<int>(p.begin(), p.begin() + spine));
      for (int i = spine; i < n; ++i) edges.emplace_back(p[i], p[static_cast<std::size_t>(rng.uniform(0, spine - 1))]);
      return edges;
    }
    case GraphClass::kTree:
      return random_tree(rng, n);
    case GraphClass::kPolygon:
    case GraphClass::kPrunedPolygon: {
      auto p = rng.permutation(n);
      Pairs edges = path_on(p);
      edges.emplace_back(p.back(), p.front());
      return edges;
    }
    case GraphClass::kComplete: {
      Pairs edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      return edges;
    }
    case GraphClass::kBipartite:
      return random_bipartite(rng, n, false);
    case GraphClass::kCompleteBipartite:
      return random_bipartite(rng, n, true);
    case GraphClass::kPlanar:
      return random_planar(rng, n);
    case GraphClass::kArbitraryConnected:
      return random_connected(rng, n);
  }
  return {};
}

/// Weight range in units (1 or 1/10), narrowed so an edge always beats any
/// route of `min_detour` or more edges.
std::pair<std::int64_t, std::int64_t> unit_range(const WeightModel& model, int min_detour) {
  const std::int64_t scale = model.kind == WeightModel::Kind::kDecimalGrid ? 10 : 1;
  std::int64_t lo = model.lo * scale;
  const std::int64_t hi = model.hi * scale;
  if (min_detour > 1) lo = std::max(lo, hi / min_detour + 1);
  return {lo, hi};
}

}  // namespace

WeightedGraph<Rational> generate(const GenSpec& spec) {
  if (spec.n < class_min_vertices(spec.cls)) {
    throw InvalidInput(std::string(class_name(spec.cls)) + " needs at least " +
                       std::to_string(class_min_vertices(spec.cls)) + " vertices");
  }
  if (spec.weights.lo < 1 || spec.weights.lo > spec.weights.hi) {
    throw InvalidInput("weight bounds must satisfy 1 <= lo <= hi");
  }
  if (spec.cls == GraphClass::kCompleteBipartite && spec.n < 2) {
    throw InvalidInput("complete_bipartite needs two nonempty sides");
  }
  Random rng(spec.seed ^ (static_cast<std::uint64_t>(spec.cls) << 56) ^ (static_cast<std::uint64_t>(spec.n) << 48));
  const auto structure = class_structure(rng, spec.cls, spec.n);

  int min_detour = 1;
  if (spec.cls == GraphClass::kComplete) min_detour = 2;
  if (spec.cls == GraphClass::kCompleteBipartite) min_detour = 3;
  if (spec.cls == GraphClass::kPrunedPolygon) min_detour = 2;
  const auto [lo, hi] = unit_range(spec.weights, min_detour);
  const std::int64_t den = spec.weights.kind == WeightModel::Kind::kDecimalGrid ? 10 : 1;

  std::vector<Edge<Rational>> edges;
  edges.reserve(structure.size());
  for (const auto& [u, v] : structure) edges.push_back({u, v, Rational(rng.uniform(lo, hi), den)});
  WeightedGraph<Rational> graph(spec.n, std::move(edges));
  if (!has_class_structure(graph, spec.cls)) {
    throw std::logic_error("generator produced a graph outside class " + std::string(class_name(spec.cls)));
  }
  return graph;
}

template <class T>
bool has_class_structure(const WeightedGraph<T>& graph, GraphClass cls) {
  if (!graph.connected()) return false;
  const int n = graph.size();
  const auto m = graph.edge_count();
  const auto degree = graph.degrees();
  const bool is_tree = m == static_cast<std::size_t>(n - 1);
  const auto two_coloring = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    const auto adj = graph.adjacency();
    std::queue<int> queue;
    color[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
    return color;
  };

  switch (cls) {
    case GraphClass::kTree:
      return is_tree;
    case GraphClass::kSnake:
      return is_tree && *std::max_element(degree.begin(), degree.end()) <= 2;
    case GraphClass::kCaterpillar: {
      if (!is_tree) return false;
      std::vector<int> inner_degree(static_cast<std::size_t>(n), 0);
      for (const auto& e : graph.edges()) {
        if (degree[e.u] >= 2 && degree[e.v] >= 2) {
          ++inner_degree[e.u];
          ++inner_degree[e.v];
        }
      }
      return *std::max_element(inner_degree.begin(), inner_degree.end()) <= 2;
    }
    case GraphClass::kPolygon:
    case GraphClass::kPrunedPolygon:
      return n >= 3 && m == static_cast<std::size_t>(n) &&
             std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
    case GraphClass::kComplete:
      return m == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    case GraphClass::kBipartite:
      return two_coloring().has_value();
    case GraphClass::kCompleteBipartite: {
      const auto color = two_coloring();
      if (!color) return false;
      const auto xs = static_cast<std::size_t>(std::count(color->begin(), color->end(), 0));
      return m == xs * (static_cast<std::size_t>(n) - xs);
    }
    case GraphClass::kPlanar:
      return is_planar(adjacency_matrix(graph));
    case GraphClass::kArbitraryConnected:
      return true;
  }
  return false;
}

template bool has_class_structure(const WeightedGraph<Rational>&, GraphClass);
template bool has_class_structure(const WeightedGraph<double>&, GraphClass);

}  // namespace metric_realize
