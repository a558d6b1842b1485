#ifndef METRIC_REALIZE_ORACLES_HPP
#define METRIC_REALIZE_ORACLES_HPP

#include "metric_realize/graph_class.hpp"
#include "metric_realize/weighted_graph.hpp"

namespace metric_realize {

inline constexpr int kBruteForceMaxVertices = 7;

/// Exhaustive realizability test, independent of the recognizers.
///
/// Every candidate topology of the class is weighted by the family values
/// of its adjacent pairs and handed to verify_realization:
///   snake               n!/2 vertex orders
///   tree, caterpillar   all n^(n-2) Pruefer sequences (filtered by shape)
///   polygon             (n-1)!/2 cyclic orders
///   bipartite           2^(n-1) side assignments, complete bipartite
///   complete            K_n
///   arbitrary_connected K_n (any positive-weighted graph)
/// The pruned classes additionally require every edge of the candidate to
/// be useful. Planar checks the triangle inequalities by scanning triples,
/// builds the pruned complete graph, and runs the subdivision search.
///
/// Throws SizeGuardExceeded above kBruteForceMaxVertices.
template <class T>
bool brute_force_class_check(const DistanceFamily<T>& family, GraphClass cls);

/// Brute-force tight-chain enumeration from `base`: returns, for each
/// vertex, bit 0 set if an even-length tight chain reaches it and bit 1
/// if an odd-length one does. Chains are simple paths over indecomposable
/// pairs whose lengths sum to D(base, v).
template <class T>
std::vector<int> brute_force_chain_parities(const DistanceFamily<T>& family, int base);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_ORACLES_HPP
