#ifndef METRIC_REALIZE_TREE_RECOGNIZERS_HPP
#define METRIC_REALIZE_TREE_RECOGNIZERS_HPP

#include <utility>
#include <vector>

#include "metric_realize/realization.hpp"

namespace metric_realize {

/// Pendant offsets t_x = 1/2 min over distinct y, z != x of
/// D(x,y) + D(x,z) - D(y,z), and the pair (a, b), a < b, maximizing
/// D(a,b) - t_a - t_b (first maximum in lexicographic pair order).
template <class T>
struct CaterpillarStats {
  std::vector<T> t;
  std::pair<int, int> extremal_pair{0, 1};
};

/// Recognizes path (snake) realizations. Uses the lexicographically first
/// pair (x, y) of maximal distance and requires D(i,j) = |D(i,x) - D(j,x)|
/// for all distinct i, j other than x. The reconstruction orders vertices
/// by distance from x.
template <class T>
Realization<T> snake_check(const DistanceFamily<T>& family);

/// Throws InvalidInput when n < 3.
template <class T>
CaterpillarStats<T> pendant_offsets(const DistanceFamily<T>& family);

/// Four-point, median, and the extremal-pair inequality
///   D(a,b) + D(i,j) >= max(D(a,i) + D(b,j), D(a,j) + D(b,i))
/// for all i, j outside {a, b}. On success a spine from a to b is laid out
/// by distance from a, pendant leaves are hung at D(a,i) - t_i, and the
/// result is verified; a failed layout or verification is a rejection.
template <class T>
Realization<T> caterpillar_check(const DistanceFamily<T>& family);

/// Four-point plus median. The reconstruction is the support graph, which
/// must then be a spanning tree realizing the family; anything else throws
/// InternalInconsistency.
template <class T>
Realization<T> tree_check(const DistanceFamily<T>& family);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_TREE_RECOGNIZERS_HPP
