#include "metric_realize/tree_recognizers.hpp"

#include <algorithm>
#include <string>

#include "metric_realize/errors.hpp"

namespace metric_realize {
namespace {

template <class T>
std::pair<int, int> lexicographic_argmax(int n, const Comparator<T>& cmp, const auto& score) {
  std::pair<int, int> best{0, 1};
  T best_value = score(0, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      T value = score(i, j);
      if (cmp.gt(value, best_value)) {
        best = {i, j};
        best_value = std::move(value);
      }
    }
  }
  return best;
}

template <class T>
Rejection from_report(std::string condition, const PairPredicateReport<T>& report) {
  Rejection r{std::move(condition), {}, {}};
  if (!report.violations.empty()) r.indices = report.violations.front().indices;
  r.detail = std::to_string(report.total_violations) + " violation(s)";
  return r;
}

}  // namespace

template <class T>
Realization<T> snake_check(const DistanceFamily<T>& family) {
  const int n = family.size();
  const auto& cmp = family.cmp();
  const int x = lexicographic_argmax<T>(n, cmp, [&](int i, int j) { return family(i, j); }).first;

  for (int i = 0; i < n; ++i) {
    if (i == x) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == x) continue;
      const T gap = abs_diff(family(i, x), family(j, x));
      if (!cmp.eq(family(i, j), gap)) {
        return Realization<T>::reject("snake", {i, j, x},
                                      "D(i,j) differs from |D(i,x) - D(j,x)| for the farthest pair's x");
      }
    }
  }

  std::vector<int> order;
  for (int v = 0; v < n; ++v) {
    if (v != x) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return family(p, x) < family(q, x); });

  std::vector<Edge<T>> edges;
  int previous = x;
  for (const int v : order) {
    T w = family(v, x) - family(previous, x);
    if (!cmp.gt(w, T(0))) {
      return Realization<T>::reject("snake-degenerate", {previous, v},
                                    "two vertices are equidistant from the path end");
    }
    edges.push_back({previous, v, std::move(w)});
    previous = v;
  }
  return accept_if_verified(WeightedGraph<T>(n, std::move(edges)), family);
}

template <class T>
CaterpillarStats<T> pendant_offsets(const DistanceFamily<T>& family) {
  const int n = family.size();
  if (n < 3) throw InvalidInput("pendant offsets need at least 3 points");
  CaterpillarStats<T> stats;
  stats.t.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::optional<T> best;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      for (int z = y + 1; z < n; ++z) {
        if (z == x) continue;
        T value = family(x, y) + family(x, z) - family(y, z);
        if (!best || value < *best) best = std::move(value);
      }
    }
    stats.t.push_back(*best / T(2));
  }
  stats.extremal_pair = lexicographic_argmax<T>(
      n, family.cmp(), [&](int i, int j) { return family(i, j) - stats.t[i] - stats.t[j]; });
  return stats;
}

template <class T>
Realization<T> caterpillar_check(const DistanceFamily<T>& family) {
  const int n = family.size();
  if (n == 2) return snake_check(family);
  const auto& cmp = family.cmp();

  if (auto report = check_four_point(family, 1); !report.holds) {
    return Realization<T>::reject(from_report("four-point", report));
  }
  if (auto report = check_median(family, 1); !report.holds) {
    return Realization<T>::reject(from_report("median", report));
  }

  const auto stats = pendant_offsets(family);
  const auto [a, b] = stats.extremal_pair;
  for (int i = 0; i < n; ++i) {
    if (i == a || i == b) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == a || j == b) continue;
      const T lhs = family(a, b) + family(i, j);
      const T first = family(a, i) + family(b, j);
      const T second = family(a, j) + family(b, i);
      if (cmp.lt(lhs, std::max(first, second))) {
        return Realization<T>::reject("caterpillar-extremal", {a, b, i, j},
                                      "D(a,b) + D(i,j) is below max(D(a,i) + D(b,j), D(a,j) + D(b,i))");
      }
    }
  }

  // Spine: a, b and every vertex with t == 0, placed at its distance from a.
  struct SpinePoint {
    T position;
    int vertex;
  };
  std::vector<SpinePoint> spine{{T(0), a}, {family(a, b), b}};
  for (int i = 0; i < n; ++i) {
    if (i == a || i == b || !cmp.is_zero(stats.t[i])) continue;
    spine.push_back({family(a, i), i});
  }
  std::stable_sort(spine.begin(), spine.end(),
                   [](const SpinePoint& p, const SpinePoint& q) { return p.position < q.position; });

  std::vector<Edge<T>> edges;
  for (std::size_t k = 1; k < spine.size(); ++k) {
    if (!cmp.lt(spine[k - 1].position, spine[k].position)) {
      return Realization<T>::reject("spine-collision", {spine[k - 1].vertex, spine[k].vertex},
                                    "two spine vertices share a position");
    }
    edges.push_back({spine[k - 1].vertex, spine[k].vertex, spine[k].position - spine[k - 1].position});
  }

  for (int i = 0; i < n; ++i) {
    if (i == a || i == b || cmp.is_zero(stats.t[i])) continue;
    const T target = family(a, i) - stats.t[i];
    const auto it = std::find_if(spine.begin(), spine.end(),
                                 [&](const SpinePoint& p) { return cmp.eq(p.position, target); });
    if (it == spine.end()) {
      return Realization<T>::reject("attachment-missing", {i},
                                    "no labeled spine vertex at distance D(a,i) - t_i from a");
    }
    edges.push_back({i, it->vertex, stats.t[i]});
  }
  return accept_if_verified(WeightedGraph<T>(n, std::move(edges)), family);
}

template <class T>
Realization<T> tree_check(const DistanceFamily<T>& family) {
  const int n = family.size();
  if (auto report = check_four_point(family, 1); !report.holds) {
    return Realization<T>::reject(from_report("four-point", report));
  }
  if (auto report = check_median(family, 1); !report.holds) {
    return Realization<T>::reject(from_report("median", report));
  }
  std::optional<WeightedGraph<T>> support;
  try {
    support = support_graph(family);
  } catch (const TriangleViolation& e) {
    throw InternalInconsistency(std::string("median family fails the triangle inequalities: ") + e.what());
  }
  if (!support->connected() || support->edge_count() != static_cast<std::size_t>(n - 1) ||
      !verify_realization(*support, family)) {
    throw InternalInconsistency("four-point and median hold but the support graph is not a realizing tree");
  }
  return Realization<T>::accept(std::move(*support));
}

#define METRIC_REALIZE_INSTANTIATE(T)                                          \
  template Realization<T> snake_check(const DistanceFamily<T>&);               \
  template CaterpillarStats<T> pendant_offsets(const DistanceFamily<T>&);      \
  template Realization<T> caterpillar_check(const DistanceFamily<T>&);         \
  template Realization<T> tree_check(const DistanceFamily<T>&);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize
