#include "metric_realize/cyclic_recognizers.hpp"

#include <algorithm>
#include <string>

#include "metric_realize/tree_recognizers.hpp"

namespace metric_realize {

template <class T>
std::variant<PolygonOrder, Rejection> polygon_order(const DistanceFamily<T>& family) {
  const int n = family.size();
  const auto table = indecomposable_pairs(family);
  std::vector<std::vector<int>> partners(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (table[i][j]) partners[i].push_back(j);
    }
    if (partners[i].size() != 2) {
      return Rejection{"partner-count", {i},
                       "vertex has " + std::to_string(partners[i].size()) + " indecomposable partners, expected 2"};
    }
  }

  int first = 0;
  int second = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (family.cmp().lt(family(i, j), family(first, second))) {
        first = i;
        second = j;
      }
    }
  }

  PolygonOrder result;
  result.order = {first, second};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[first] = seen[second] = true;
  int previous = first;
  int current = second;
  while (true) {
    const auto& p = partners[current];
    if (p[0] != previous && p[1] != previous) {
      return Rejection{"walk-ambiguous", {current}, "walk reached a vertex not linked to its predecessor"};
    }
    const int next = p[0] == previous ? p[1] : p[0];
    if (seen[next]) break;
    seen[next] = true;
    result.order.push_back(next);
    previous = current;
    current = next;
  }
  result.complete = static_cast<int>(result.order.size()) == n;
  return result;
}

std::vector<int> canonical_cycle(std::vector<int> order) {
  if (order.size() < 3) return order;
  const auto smallest = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), smallest, order.end());
  if (order.back() < order[1]) std::reverse(order.begin() + 1, order.end());
  return order;
}

template <class T>
Realization<T> pruned_polygon_check(const DistanceFamily<T>& family) {
  const int n = family.size();
  if (n < 3) return Realization<T>::reject("size", {}, "a polygon needs at least 3 vertices");
  if (auto report = check_triangle(family, 1); !report.holds) {
    return Realization<T>::reject("triangle", report.violations.front().indices);
  }
  auto walked = polygon_order(family);
  if (auto* rejection = std::get_if<Rejection>(&walked)) return Realization<T>::reject(std::move(*rejection));
  const auto& walk = std::get<PolygonOrder>(walked);
  if (!walk.complete) {
    return Realization<T>::reject("walk-incomplete", walk.order,
                                  "walk closed after " + std::to_string(walk.order.size()) + " vertices");
  }

  const auto& order = walk.order;
  // prefix[k] = length along the walk from order[0] to order[k].
  std::vector<T> prefix(static_cast<std::size_t>(n), T(0));
  for (int k = 1; k < n; ++k) prefix[k] = prefix[k - 1] + family(order[k - 1], order[k]);
  const T perimeter = prefix[n - 1] + family(order[n - 1], order[0]);
  const auto& cmp = family.cmp();
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const T forward = prefix[q] - prefix[p];
      const T backward = perimeter - forward;
      if (!cmp.eq(family(order[p], order[q]), std::min(forward, backward))) {
        return Realization<T>::reject("arc-minimum", {order[p], order[q]},
                                      "distance differs from the shorter arc of the walk");
      }
    }
  }

  std::vector<Edge<T>> edges;
  for (int k = 0; k < n; ++k) {
    const int u = order[k];
    const int v = order[(k + 1) % n];
    edges.push_back({u, v, family(u, v)});
  }
  return accept_if_verified(WeightedGraph<T>(n, std::move(edges)), family);
}

template <class T>
Realization<T> polygon_check(const DistanceFamily<T>& family) {
  const int n = family.size();
  if (n < 3) return Realization<T>::reject("size", {}, "a polygon needs at least 3 vertices");
  auto pruned = pruned_polygon_check(family);
  if (pruned.accepted()) return pruned;
  auto snake = snake_check(family);
  if (!snake.accepted()) {
    return Realization<T>::reject("polygon", {},
                                  "neither snakelike (" + snake.rejection->condition + ") nor a pruned polygon (" +
                                      pruned.rejection->condition + ")");
  }
  const auto degrees = snake.graph->degrees();
  std::vector<int> ends;
  for (int v = 0; v < n; ++v) {
    if (degrees[v] == 1) ends.push_back(v);
  }
  auto edges = snake.graph->edges();
  edges.push_back({ends[0], ends[1], family(ends[0], ends[1])});
  return accept_if_verified(WeightedGraph<T>(n, std::move(edges)), family);
}

#define METRIC_REALIZE_INSTANTIATE(T)                                                             \
  template std::variant<PolygonOrder, Rejection> polygon_order(const DistanceFamily<T>&);         \
  template Realization<T> pruned_polygon_check(const DistanceFamily<T>&);                         \
  template Realization<T> polygon_check(const DistanceFamily<T>&);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize
