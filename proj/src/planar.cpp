#include "metric_realize/planar.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "metric_realize/errors.hpp"

namespace metric_realize {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const AdjacencyMatrix& graph) {
  const int n = static_cast<int>(graph.size());
  BoostGraph g(static_cast<std::size_t>(n));
  int index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (graph[u][v]) boost::add_edge(u, v, index++, g);
    }
  }
  return g;
}

int edge_count(const AdjacencyMatrix& graph) {
  int m = 0;
  for (std::size_t u = 0; u < graph.size(); ++u) {
    for (std::size_t v = u + 1; v < graph.size(); ++v) m += graph[u][v] ? 1 : 0;
  }
  return m;
}

/// Reads hubs and chains off a graph that is exactly a K5 or K3,3
/// subdivision (branch vertices of degree 4 or 3, all others 0 or 2).
std::optional<PlanarWitness> witness_from_subdivision(const AdjacencyMatrix& sub) {
  const int n = static_cast<int>(sub.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (sub[u][v]) adj[u].push_back(v);
    }
  }
  std::vector<int> hubs;
  for (int v = 0; v < n; ++v) {
    const auto d = adj[v].size();
    if (d >= 3) {
      hubs.push_back(v);
    } else if (d == 1) {
      return std::nullopt;
    }
  }
  PlanarWitness witness;
  if (hubs.size() == 5 && std::all_of(hubs.begin(), hubs.end(), [&](int h) { return adj[h].size() == 4; })) {
    witness.kind = KuratowskiKind::kK5;
  } else if (hubs.size() == 6 && std::all_of(hubs.begin(), hubs.end(), [&](int h) { return adj[h].size() == 3; })) {
    witness.kind = KuratowskiKind::kK33;
  } else {
    return std::nullopt;
  }
  const auto is_hub = [&](int v) { return std::binary_search(hubs.begin(), hubs.end(), v); };

  std::set<std::pair<int, int>> seen;
  std::vector<WitnessChain> chains;
  for (const int h : hubs) {
    for (const int start : adj[h]) {
      WitnessChain chain{h, -1, {}};
      int previous = h;
      int current = start;
      while (!is_hub(current)) {
        chain.interior.push_back(current);
        const int next = adj[current][0] == previous ? adj[current][1] : adj[current][0];
        previous = current;
        current = next;
      }
      chain.b = current;
      // Each chain is traced from both ends; keep the copy that starts at the smaller hub.
      if (chain.a > chain.b) continue;
      const int first_step = chain.interior.empty() ? chain.b : chain.interior.front();
      if (!seen.insert({chain.a, first_step}).second) continue;
      chains.push_back(std::move(chain));
    }
  }

  if (witness.kind == KuratowskiKind::kK5) {
    witness.hubs = hubs;
    witness.chains = std::move(chains);
  } else {
    std::vector<int> side_a{hubs.front()};
    std::vector<int> side_b;
    for (const auto& c : chains) {
      if (c.a == hubs.front()) side_b.push_back(c.b);
    }
    for (const int h : hubs) {
      if (h != hubs.front() && std::find(side_b.begin(), side_b.end(), h) == side_b.end()) side_a.push_back(h);
    }
    std::sort(side_b.begin(), side_b.end());
    if (side_a.size() != 3 || side_b.size() != 3) return std::nullopt;
    witness.hubs = side_a;
    witness.hubs.insert(witness.hubs.end(), side_b.begin(), side_b.end());
    for (auto& c : chains) {
      if (std::find(side_a.begin(), side_a.end(), c.a) == side_a.end()) {
        std::swap(c.a, c.b);
        std::reverse(c.interior.begin(), c.interior.end());
      }
    }
    witness.chains = std::move(chains);
  }
  return witness;
}

std::vector<std::pair<int, int>> required_pairs(const PlanarWitness& witness) {
  std::vector<std::pair<int, int>> pairs;
  const auto& h = witness.hubs;
  if (witness.kind == KuratowskiKind::kK5) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = i + 1; j < h.size(); ++j) pairs.emplace_back(h[i], h[j]);
    }
  } else {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 3; j < 6; ++j) pairs.emplace_back(h[i], h[j]);
    }
  }
  return pairs;
}

/// Backtracking over hub pairs. Adjacent hubs always use their edge: a
/// direct edge consumes no vertex, so it never blocks another chain.
class SubdivisionSearch {
 public:
  SubdivisionSearch(const AdjacencyMatrix& graph, std::vector<int> hubs, std::vector<std::pair<int, int>> pairs)
      : graph_(graph), n_(static_cast<int>(graph.size())), hubs_(std::move(hubs)) {
    blocked_.assign(static_cast<std::size_t>(n_), false);
    for (const int h : hubs_) blocked_[h] = true;
    for (const auto& [a, b] : pairs) {
      if (graph_[a][b]) {
        chains_.push_back({a, b, {}});
      } else {
        open_.emplace_back(a, b);
      }
    }
  }

  bool run() {
    const int free_vertices = n_ - static_cast<int>(hubs_.size());
    if (static_cast<int>(open_.size()) > free_vertices) return false;
    return solve(0);
  }

  std::vector<WitnessChain> chains() const { return chains_; }

 private:
  bool solve(std::size_t k) {
    if (k == open_.size()) return true;
    const auto [a, b] = open_[k];
    std::vector<int> path;
    return extend(k, a, b, path);
  }

  bool extend(std::size_t k, int current, int target, std::vector<int>& path) {
    for (int next = 0; next < n_; ++next) {
      if (!graph_[current][next]) continue;
      if (next == target) {
        if (path.empty()) continue;
        chains_.push_back({open_[k].first, target, path});
        if (solve(k + 1)) return true;
        chains_.pop_back();
        continue;
      }
      if (blocked_[next]) continue;
      blocked_[next] = true;
      path.push_back(next);
      if (extend(k, next, target, path)) return true;
      path.pop_back();
      blocked_[next] = false;
    }
    return false;
  }

  const AdjacencyMatrix& graph_;
  int n_;
  std::vector<int> hubs_;
  std::vector<bool> blocked_;
  std::vector<std::pair<int, int>> open_;
  std::vector<WitnessChain> chains_;
};

/// Calls visit(subset) for each k-subset of candidates, in lexicographic
/// order, stopping early when visit returns true.
template <class Visit>
bool for_each_subset(const std::vector<int>& candidates, std::size_t k, Visit&& visit) {
  if (candidates.size() < k) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> subset;
    subset.reserve(k);
    for (const auto i : idx) subset.push_back(candidates[i]);
    if (visit(subset)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == candidates.size() - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

template <class T>
AdjacencyMatrix adjacency_matrix(const WeightedGraph<T>& graph) {
  const auto n = static_cast<std::size_t>(graph.size());
  AdjacencyMatrix adj(n, std::vector<bool>(n, false));
  for (const auto& e : graph.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

bool is_planar(const AdjacencyMatrix& graph) {
  const int n = static_cast<int>(graph.size());
  if (n >= 3 && edge_count(graph) > 3 * n - 6) return false;
  auto g = to_boost(graph);
  return boost::boyer_myrvold_planarity_test(g);
}

std::optional<PlanarWitness> kuratowski_witness(const AdjacencyMatrix& graph) {
  auto g = to_boost(graph);
  using EdgeDescriptor = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<EdgeDescriptor> kuratowski_edges;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski_edges));
  if (planar) return std::nullopt;
  const auto n = graph.size();
  AdjacencyMatrix sub(n, std::vector<bool>(n, false));
  for (const auto& e : kuratowski_edges) {
    const auto u = boost::source(e, g);
    const auto v = boost::target(e, g);
    sub[u][v] = sub[v][u] = true;
  }
  // Boost's subgraph may carry extra edges (pendant paths, chords). An
  // edge-minimal non-planar graph is a K5 or K3,3 subdivision.
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!sub[u][v]) continue;
      sub[u][v] = sub[v][u] = false;
      if (is_planar(sub)) sub[u][v] = sub[v][u] = true;
    }
  }
  auto witness = witness_from_subdivision(sub);
  if (!witness || !witness_is_valid(*witness, graph)) {
    throw InternalInconsistency("planarity test returned a malformed Kuratowski subgraph");
  }
  return witness;
}

bool witness_is_valid(const PlanarWitness& witness, const AdjacencyMatrix& graph) {
  const int n = static_cast<int>(graph.size());
  const std::size_t hub_count = witness.kind == KuratowskiKind::kK5 ? 5 : 6;
  if (witness.hubs.size() != hub_count) return false;
  std::vector<bool> is_hub(static_cast<std::size_t>(n), false);
  for (const int h : witness.hubs) {
    if (h < 0 || h >= n || is_hub[h]) return false;
    is_hub[h] = true;
  }

  auto required = required_pairs(witness);
  for (auto& [a, b] : required) {
    if (a > b) std::swap(a, b);
  }
  std::sort(required.begin(), required.end());
  std::vector<std::pair<int, int>> present;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& chain : witness.chains) {
    present.emplace_back(std::min(chain.a, chain.b), std::max(chain.a, chain.b));
    int previous = chain.a;
    for (const int v : chain.interior) {
      if (v < 0 || v >= n || is_hub[v] || used[v]) return false;
      used[v] = true;
      if (!graph[previous][v]) return false;
      previous = v;
    }
    if (chain.b < 0 || chain.b >= n || !graph[previous][chain.b]) return false;
  }
  std::sort(present.begin(), present.end());
  return present == required;
}

template <class T>
bool witness_is_valid(const PlanarWitness& witness, const DistanceFamily<T>& family) {
  const auto table = indecomposable_pairs(family);
  return witness_is_valid(witness, AdjacencyMatrix(table.begin(), table.end()));
}

std::optional<PlanarWitness> subdivision_witness_search(const AdjacencyMatrix& graph) {
  const int n = static_cast<int>(graph.size());
  if (n > kWitnessSearchMaxVertices) {
    throw SizeGuardExceeded("subdivision search is limited to " + std::to_string(kWitnessSearchMaxVertices) +
                            " vertices, got " + std::to_string(n));
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) degree[u] += graph[u][v] ? 1 : 0;
  }
  const auto with_degree = [&](int minimum) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
      if (degree[v] >= minimum) out.push_back(v);
    }
    return out;
  };

  std::optional<PlanarWitness> found;
  for_each_subset(with_degree(4), 5, [&](const std::vector<int>& q) {
    PlanarWitness candidate{KuratowskiKind::kK5, q, {}};
    SubdivisionSearch search(graph, q, required_pairs(candidate));
    if (!search.run()) return false;
    candidate.chains = search.chains();
    found = std::move(candidate);
    return true;
  });
  if (found) return found;

  for_each_subset(with_degree(3), 6, [&](const std::vector<int>& six) {
    // six[0] goes to A; choose its two partners from the other five.
    const std::vector<int> rest(six.begin() + 1, six.end());
    return for_each_subset(rest, 2, [&](const std::vector<int>& partners) {
      std::vector<int> side_a{six[0], partners[0], partners[1]};
      std::vector<int> side_b;
      for (const int v : rest) {
        if (v != partners[0] && v != partners[1]) side_b.push_back(v);
      }
      std::vector<int> hubs = side_a;
      hubs.insert(hubs.end(), side_b.begin(), side_b.end());
      PlanarWitness candidate{KuratowskiKind::kK33, hubs, {}};
      SubdivisionSearch search(graph, hubs, required_pairs(candidate));
      if (!search.run()) return false;
      candidate.chains = search.chains();
      found = std::move(candidate);
      return true;
    });
  });
  return found;
}

template <class T>
PlanarVerdict<T> planar_check(const DistanceFamily<T>& family) {
  if (auto report = check_triangle(family, 1); !report.holds) {
    return {Realization<T>::reject("triangle", report.violations.front().indices,
                                   "the family fails the triangle inequalities"),
            std::nullopt};
  }
  auto support = support_graph(family);
  if (!support.connected()) throw InternalInconsistency("support graph of a metric family is disconnected");
  const auto adj = adjacency_matrix(support);
  if (is_planar(adj)) {
    if (!verify_realization(support, family)) {
      throw InternalInconsistency("support graph of a metric family does not realize it");
    }
    return {Realization<T>::accept(std::move(support)), std::nullopt};
  }
  auto witness = kuratowski_witness(adj);
  if (!witness) throw InternalInconsistency("non-planar support graph without a Kuratowski subgraph");
  const bool k5 = witness->kind == KuratowskiKind::kK5;
  return {Realization<T>::reject(k5 ? "kuratowski-k5" : "kuratowski-k33", witness->hubs,
                                 "support graph contains a subdivision of " + std::string(k5 ? "K5" : "K3,3")),
          std::move(witness)};
}

#define METRIC_REALIZE_INSTANTIATE(T)                                                    \
  template AdjacencyMatrix adjacency_matrix(const WeightedGraph<T>&);                    \
  template bool witness_is_valid(const PlanarWitness&, const DistanceFamily<T>&);        \
  template PlanarVerdict<T> planar_check(const DistanceFamily<T>&);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize
