#ifndef METRIC_REALIZE_DENSE_RECOGNIZERS_HPP
#define METRIC_REALIZE_DENSE_RECOGNIZERS_HPP

#include <map>
#include <utility>
#include <vector>

#include "metric_realize/realization.hpp"

namespace metric_realize {

/// Side assignment recovered from tight chains out of the base vertex.
///
/// A tight chain from x to i is a sequence x = c_0, c_1, ..., c_k = i of
/// distinct vertices whose consecutive pairs are indecomposable and whose
/// consecutive distances sum to D(x,i). An even k puts i on x's side, an
/// odd k on the other side. A vertex may land on both sides (an overlap)
/// or on neither (a cover gap); both are reported, not hidden.
struct Bipartition {
  std::pair<int, int> base_pair{0, 1};
  std::vector<int> x_side;
  std::vector<int> y_side;
  /// One certifying chain per (vertex, side), each starting at x.
  std::map<int, std::vector<int>> x_witness;
  std::map<int, std::vector<int>> y_witness;

  std::vector<int> overlap() const;
  std::vector<int> uncovered(int n) const;
};

/// Every pair indecomposable; the reconstruction is K_n weighted by D.
template <class T>
Realization<T> complete_check(const DistanceFamily<T>& family);

/// Base pair (x, y) is the lexicographically first pair of minimal distance.
/// Chains are found by a parity DP over vertices in increasing D(x, .)
/// order: (v, p) is reachable when some reachable (u, 1 - p) has (u, v)
/// indecomposable and D(x,u) + D(u,v) = D(x,v). Every prefix of a tight
/// chain is tight (triangle inequalities), so the DP sees every chain.
template <class T>
Bipartition bipartition(const DistanceFamily<T>& family);

/// Disjoint sides covering [n], and for each same-side pair a middle
/// vertex z on the other side with D(a,b) = D(a,z) + D(z,b). The
/// reconstruction is the complete bipartite graph with cross weights D.
template <class T>
Realization<T> bigraph_check(const DistanceFamily<T>& family);

/// bigraph_check plus indecomposability of every cross pair.
template <class T>
Realization<T> cobigraph_check(const DistanceFamily<T>& family);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_DENSE_RECOGNIZERS_HPP
