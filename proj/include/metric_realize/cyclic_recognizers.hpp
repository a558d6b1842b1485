#ifndef METRIC_REALIZE_CYCLIC_RECOGNIZERS_HPP
#define METRIC_REALIZE_CYCLIC_RECOGNIZERS_HPP

#include <variant>
#include <vector>

#include "metric_realize/realization.hpp"

namespace metric_realize {

/// Vertices in walk order. `complete` is true when the walk absorbed all n
/// vertices before returning to a visited one.
struct PolygonOrder {
  std::vector<int> order;
  bool complete = false;
};

/// Walks the indecomposable pairs starting from the lexicographically first
/// pair of minimal distance. Requires every vertex to have exactly two
/// indecomposable partners; otherwise returns a Rejection ("partner-count")
/// naming the first offending vertex. Assumes the triangle inequalities.
template <class T>
std::variant<PolygonOrder, Rejection> polygon_order(const DistanceFamily<T>& family);

/// Rotates and reflects a cyclic order so it starts at its smallest label
/// and continues toward the smaller of that label's two neighbours.
std::vector<int> canonical_cycle(std::vector<int> order);

/// Pruned polygon: two partners per vertex, a complete walk, and every
/// D(a,b) equal to the shorter of the two arcs along the walk.
template <class T>
Realization<T> pruned_polygon_check(const DistanceFamily<T>& family);

/// Polygon: the pruned polygon when it exists, else a snake closed by an
/// edge of weight D(endpoints). n < 3 is rejected.
template <class T>
Realization<T> polygon_check(const DistanceFamily<T>& family);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_CYCLIC_RECOGNIZERS_HPP
