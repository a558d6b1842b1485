#ifndef METRIC_REALIZE_PLANAR_HPP
#define METRIC_REALIZE_PLANAR_HPP

#include <optional>
#include <vector>

#include "metric_realize/realization.hpp"

namespace metric_realize {

enum class KuratowskiKind { kK5, kK33 };

/// A path joining two hubs. `interior` lists the intermediate vertices in
/// order from `a` to `b`; it is empty when a and b are adjacent.
struct WitnessChain {
  int a = 0;
  int b = 0;
  std::vector<int> interior;
};

/// Certificate of a K5 or K3,3 subdivision. For K5, `hubs` is the 5-set Q.
/// For K3,3, `hubs` holds A (first three) then B (last three), and each
/// chain joins a in A to b in B.
struct PlanarWitness {
  KuratowskiKind kind = KuratowskiKind::kK5;
  std::vector<int> hubs;
  std::vector<WitnessChain> chains;
};

template <class T>
struct PlanarVerdict {
  Realization<T> realization;
  std::optional<PlanarWitness> witness;
};

/// Adjacency matrix of a simple graph; adjacency[u][v] == adjacency[v][u].
using AdjacencyMatrix = std::vector<std::vector<bool>>;

template <class T>
AdjacencyMatrix adjacency_matrix(const WeightedGraph<T>& graph);

/// Exact planarity test (Boyer-Myrvold).
bool is_planar(const AdjacencyMatrix& graph);

/// A Kuratowski subdivision extracted by the planarity test, or nullopt
/// when the graph is planar.
std::optional<PlanarWitness> kuratowski_witness(const AdjacencyMatrix& graph);

/// Structural check: hub counts, every required hub pair joined exactly
/// once, interiors avoid hubs and are pairwise disjoint, and every link of
/// every chain is an edge of `graph`.
bool witness_is_valid(const PlanarWitness& witness, const AdjacencyMatrix& graph);

/// Same check with links required to be indecomposable pairs of `family`.
template <class T>
bool witness_is_valid(const PlanarWitness& witness, const DistanceFamily<T>& family);

inline constexpr int kWitnessSearchMaxVertices = 10;

/// Exhaustive search over hub sets (5-sets, then disjoint 3-set pairs) for
/// internally disjoint connecting paths avoiding the hubs. Exponential:
/// throws SizeGuardExceeded above kWitnessSearchMaxVertices vertices.
std::optional<PlanarWitness> subdivision_witness_search(const AdjacencyMatrix& graph);

template <class T>
std::optional<PlanarWitness> subdivision_witness_search(const WeightedGraph<T>& graph) {
  return subdivision_witness_search(adjacency_matrix(graph));
}

/// Triangle inequalities, then planarity of the support graph. Accepts
/// with the support graph (verified); rejects non-planar families with a
/// Kuratowski witness over indecomposable pairs.
template <class T>
PlanarVerdict<T> planar_check(const DistanceFamily<T>& family);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_PLANAR_HPP
