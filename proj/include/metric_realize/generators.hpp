#ifndef METRIC_REALIZE_GENERATORS_HPP
#define METRIC_REALIZE_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "metric_realize/graph_class.hpp"
#include "metric_realize/weighted_graph.hpp"

namespace metric_realize {

struct WeightModel {
  enum class Kind { kInteger, kDecimalGrid };
  Kind kind = Kind::kInteger;
  /// Inclusive bounds. For kDecimalGrid the weights are multiples of 0.1.
  int lo = 1;
  int hi = 20;
};

struct GenSpec {
  GraphClass cls = GraphClass::kTree;
  int n = 5;
  std::uint64_t seed = 0;
  WeightModel weights{};
};

/// Portable seeded source: std::mt19937_64 is fully specified, but the
/// standard distributions are not, so draws are done here.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double probability);
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

/// Deterministic in every GenSpec field. Throws InvalidInput for
/// infeasible specs (n below the class minimum, lo < 1, lo > hi).
///
/// Complete, complete-bipartite and pruned-polygon instances draw weights
/// from the upper part of [lo, hi] so that every edge is strictly the
/// shortest route between its ends, which makes the graph pruned.
WeightedGraph<Rational> generate(const GenSpec& spec);

/// Labeled tree from a Pruefer sequence over {0, ..., n-1} (length n - 2),
/// weights left at 1.
std::vector<std::pair<int, int>> pruefer_tree_edges(const std::vector<int>& sequence, int n);

/// Structural membership of the unweighted graph in `cls`.
template <class T>
bool has_class_structure(const WeightedGraph<T>& graph, GraphClass cls);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_GENERATORS_HPP
