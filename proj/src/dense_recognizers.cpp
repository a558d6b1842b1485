#include "metric_realize/dense_recognizers.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace metric_realize {

std::vector<int> Bipartition::overlap() const {
  std::vector<int> both;
  std::set_intersection(x_side.begin(), x_side.end(), y_side.begin(), y_side.end(), std::back_inserter(both));
  return both;
}

std::vector<int> Bipartition::uncovered(int n) const {
  std::vector<int> missing;
  for (int v = 0; v < n; ++v) {
    if (!std::binary_search(x_side.begin(), x_side.end(), v) && !std::binary_search(y_side.begin(), y_side.end(), v)) {
      missing.push_back(v);
    }
  }
  return missing;
}

template <class T>
Realization<T> complete_check(const DistanceFamily<T>& family) {
  const int n = family.size();
  if (auto report = check_triangle(family, 1); !report.holds) {
    return Realization<T>::reject("triangle", report.violations.front().indices);
  }
  std::vector<Edge<T>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!is_indecomposable(family, i, j)) {
        return Realization<T>::reject("decomposable", {i, j}, "pair is not indecomposable");
      }
      edges.push_back({i, j, family(i, j)});
    }
  }
  return accept_if_verified(WeightedGraph<T>(n, std::move(edges)), family);
}

template <class T>
Bipartition bipartition(const DistanceFamily<T>& family) {
  const int n = family.size();
  const auto& cmp = family.cmp();
  Bipartition result;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (cmp.lt(family(i, j), family(result.base_pair.first, result.base_pair.second))) result.base_pair = {i, j};
    }
  }
  const int x = result.base_pair.first;
  const auto table = indecomposable_pairs(family);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return family(x, p) < family(x, q); });

  // predecessor[v][parity]: -2 unreachable, -1 for (x, even), else u.
  std::vector<std::array<int, 2>> predecessor(static_cast<std::size_t>(n), {-2, -2});
  predecessor[x][0] = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int v = order[k];
    if (v == x) continue;
    for (std::size_t m = 0; m < k; ++m) {
      const int u = order[m];
      if (!table[u][v] || !cmp.eq(family(x, u) + family(u, v), family(x, v))) continue;
      for (int parity = 0; parity < 2; ++parity) {
        if (predecessor[u][1 - parity] != -2 && predecessor[v][parity] == -2) predecessor[v][parity] = u;
      }
    }
  }

  const auto chain = [&](int v, int parity) {
    std::vector<int> path;
    while (v != -1) {
      path.push_back(v);
      const int u = predecessor[v][parity];
      v = u;
      parity = 1 - parity;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  for (int v = 0; v < n; ++v) {
    if (predecessor[v][0] != -2) {
      result.x_side.push_back(v);
      result.x_witness[v] = chain(v, 0);
    }
    if (predecessor[v][1] != -2) {
      result.y_side.push_back(v);
      result.y_witness[v] = chain(v, 1);
    }
  }
  return result;
}

template <class T>
Realization<T> bigraph_check(const DistanceFamily<T>& family) {
  const int n = family.size();
  if (auto report = check_triangle(family, 1); !report.holds) {
    return Realization<T>::reject("triangle", report.violations.front().indices);
  }
  const auto sides = bipartition(family);
  if (auto both = sides.overlap(); !both.empty()) {
    return Realization<T>::reject("overlap", both, "vertices reachable by chains of both parities");
  }
  if (auto missing = sides.uncovered(n); !missing.empty()) {
    return Realization<T>::reject("cover-gap", missing, "vertices reachable by no tight chain");
  }
  if (!std::binary_search(sides.y_side.begin(), sides.y_side.end(), sides.base_pair.second)) {
    return Realization<T>::reject("base-partner", {sides.base_pair.second}, "base partner is not on the far side");
  }

  const auto& cmp = family.cmp();
  const auto midpoint_exists = [&](int a, int b, const std::vector<int>& other) {
    return std::any_of(other.begin(), other.end(),
                       [&](int z) { return cmp.eq(family(a, b), family(a, z) + family(z, b)); });
  };
  for (const auto* side : {&sides.x_side, &sides.y_side}) {
    const auto& other = side == &sides.x_side ? sides.y_side : sides.x_side;
    for (std::size_t p = 0; p < side->size(); ++p) {
      for (std::size_t q = p + 1; q < side->size(); ++q) {
        const int a = (*side)[p];
        const int b = (*side)[q];
        if (!midpoint_exists(a, b, other)) {
          return Realization<T>::reject("same-side-midpoint", {a, b},
                                        "no vertex on the other side splits D(a,b)");
        }
      }
    }
  }

  std::vector<Edge<T>> edges;
  for (const int a : sides.x_side) {
    for (const int b : sides.y_side) edges.push_back({a, b, family(a, b)});
  }
  return accept_if_verified(WeightedGraph<T>(n, std::move(edges)), family);
}

template <class T>
Realization<T> cobigraph_check(const DistanceFamily<T>& family) {
  auto result = bigraph_check(family);
  if (!result.accepted()) return result;
  for (const auto& e : result.graph->edges()) {
    if (!is_indecomposable(family, e.u, e.v)) {
      return Realization<T>::reject("cross-decomposable", {e.u, e.v}, "cross pair is not indecomposable");
    }
  }
  return result;
}

#define METRIC_REALIZE_INSTANTIATE(T)                                     \
  template Realization<T> complete_check(const DistanceFamily<T>&);       \
  template Bipartition bipartition(const DistanceFamily<T>&);             \
  template Realization<T> bigraph_check(const DistanceFamily<T>&);        \
  template Realization<T> cobigraph_check(const DistanceFamily<T>&);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize
