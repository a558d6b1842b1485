#include "metric_realize/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "metric_realize/errors.hpp"
#include "metric_realize/generators.hpp"
#include "metric_realize/planar.hpp"

namespace metric_realize {
namespace {

template <class T>
class Oracle {
 public:
  explicit Oracle(const DistanceFamily<T>& family) : family_(family), n_(family.size()) {}

  bool run(GraphClass cls) const {
    switch (cls) {
      case GraphClass::kSnake:
        return any_snake();
      case GraphClass::kCaterpillar:
        return any_tree([](const WeightedGraph<T>& g) { return has_class_structure(g, GraphClass::kCaterpillar); });
      case GraphClass::kTree:
        return any_tree([](const WeightedGraph<T>&) { return true; });
      case GraphClass::kPolygon:
        return any_cycle(false);
      case GraphClass::kPrunedPolygon:
        return any_cycle(true);
      case GraphClass::kComplete:
        return realizes(all_pairs(), true);
      case GraphClass::kBipartite:
        return any_bipartite(false);
      case GraphClass::kCompleteBipartite:
        return any_bipartite(true);
      case GraphClass::kPlanar:
        return planar();
      case GraphClass::kArbitraryConnected:
        return realizes(all_pairs(), false);
    }
    return false;
  }

  bool pair_is_indecomposable(int i, int j) const {
    const auto& cmp = family_.cmp();
    for (int z = 0; z < n_; ++z) {
      if (z != i && z != j && !cmp.lt(family_(i, j), family_(i, z) + family_(z, j))) return false;
    }
    return true;
  }

 private:
  using Pairs = std::vector<std::pair<int, int>>;

  bool realizes(const Pairs& pairs, bool require_pruned) const {
    std::vector<Edge<T>> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
      if (require_pruned && !pair_is_indecomposable(u, v)) return false;
      edges.push_back({u, v, family_(u, v)});
    }
    const auto graph = WeightedGraph<T>::unverified(n_, std::move(edges));
    return graph.connected() && verify_realization(graph, family_);
  }

  Pairs all_pairs() const {
    Pairs pairs;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
  }

  bool any_snake() const {
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    do {
      if (order.front() > order.back()) continue;
      Pairs pairs;
      for (int k = 0; k + 1 < n_; ++k) pairs.emplace_back(order[k], order[k + 1]);
      if (realizes(pairs, false)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
  }

  bool any_tree(const std::function<bool(const WeightedGraph<T>&)>& shape) const {
    const int length = std::max(0, n_ - 2);
    std::vector<int> sequence(static_cast<std::size_t>(length), 0);
    while (true) {
      const auto pairs = pruefer_tree_edges(sequence, n_);
      std::vector<Edge<T>> edges;
      for (const auto& [u, v] : pairs) edges.push_back({u, v, family_(u, v)});
      const WeightedGraph<T> tree(n_, std::move(edges));
      if (shape(tree) && verify_realization(tree, family_)) return true;
      int k = 0;
      while (k < length && ++sequence[k] == n_) sequence[k++] = 0;
      if (k == length) return false;
    }
  }

  bool any_cycle(bool require_pruned) const {
    if (n_ < 3) return false;
    std::vector<int> rest(static_cast<std::size_t>(n_ - 1));
    std::iota(rest.begin(), rest.end(), 1);
    do {
      if (rest.front() > rest.back()) continue;
      Pairs pairs{{0, rest.front()}, {rest.back(), 0}};
      for (std::size_t k = 0; k + 1 < rest.size(); ++k) pairs.emplace_back(rest[k], rest[k + 1]);
      if (realizes(pairs, require_pruned)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
  }

  bool any_bipartite(bool require_pruned) const {
    const unsigned assignments = 1U << (n_ - 1);
    for (unsigned mask = 1; mask < assignments; ++mask) {
      Pairs pairs;
      for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
          const bool side_i = i > 0 && ((mask >> (i - 1)) & 1U);
          const bool side_j = (mask >> (j - 1)) & 1U;
          if (side_i != side_j) pairs.emplace_back(i, j);
        }
      }
      if (realizes(pairs, require_pruned)) return true;
    }
    return false;
  }

  bool planar() const {
    const auto& cmp = family_.cmp();
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        for (int k = 0; k < n_; ++k) {
          if (i != j && j != k && i != k && cmp.gt(family_(i, k), family_(i, j) + family_(j, k))) return false;
        }
      }
    }
    Pairs support;
    for (const auto& [i, j] : all_pairs()) {
      if (pair_is_indecomposable(i, j)) support.emplace_back(i, j);
    }
    if (!realizes(support, false)) return false;
    AdjacencyMatrix adjacency(static_cast<std::size_t>(n_), std::vector<bool>(static_cast<std::size_t>(n_), false));
    for (const auto& [i, j] : support) adjacency[i][j] = adjacency[j][i] = true;
    return !subdivision_witness_search(adjacency).has_value();
  }

  const DistanceFamily<T>& family_;
  int n_;
};

}  // namespace

template <class T>
bool brute_force_class_check(const DistanceFamily<T>& family, GraphClass cls) {
  if (family.size() > kBruteForceMaxVertices) {
    throw SizeGuardExceeded("brute-force oracle limited to " + std::to_string(kBruteForceMaxVertices) +
                            " vertices, got " + std::to_string(family.size()));
  }
  return Oracle<T>(family).run(cls);
}

template <class T>
std::vector<int> brute_force_chain_parities(const DistanceFamily<T>& family, int base) {
  const int n = family.size();
  if (n > kBruteForceMaxVertices) {
    throw SizeGuardExceeded("brute-force chain enumeration limited to " + std::to_string(kBruteForceMaxVertices) +
                            " vertices");
  }
  if (base < 0 || base >= n) throw std::out_of_range("base vertex out of range");
  const Oracle<T> oracle(family);
  const auto& cmp = family.cmp();
  std::vector<int> parities(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  const std::function<void(int, T, int)> extend = [&](int v, T length, int links) {
    if (cmp.eq(length, family(base, v))) parities[v] |= 1 << (links % 2);
    for (int w = 0; w < n; ++w) {
      if (on_path[w] || !oracle.pair_is_indecomposable(v, w)) continue;
      on_path[w] = true;
      extend(w, length + family(v, w), links + 1);
      on_path[w] = false;
    }
  };
  on_path[base] = true;
  parities[base] = 1;
  for (int w = 0; w < n; ++w) {
    if (w == base || !oracle.pair_is_indecomposable(base, w)) continue;
    on_path[w] = true;
    extend(w, family(base, w), 1);
    on_path[w] = false;
  }
  return parities;
}

#define METRIC_REALIZE_INSTANTIATE(T)                                                   \
  template bool brute_force_class_check(const DistanceFamily<T>&, GraphClass);         \
  template std::vector<int> brute_force_chain_parities(const DistanceFamily<T>&, int);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize
