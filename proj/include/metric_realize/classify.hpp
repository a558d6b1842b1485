#ifndef METRIC_REALIZE_CLASSIFY_HPP
#define METRIC_REALIZE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "metric_realize/dense_recognizers.hpp"
#include "metric_realize/graph_class.hpp"
#include "metric_realize/planar.hpp"
#include "metric_realize/realization.hpp"

namespace metric_realize {

/// Runs the recognizer for `cls`. Families below the class minimum size are
/// rejected with condition "size". arbitrary_connected accepts exactly the
/// families satisfying the triangle inequalities, with the support graph.
template <class T>
Realization<T> realize(const DistanceFamily<T>& family, GraphClass cls);

template <class T>
struct ClassVerdict {
  GraphClass cls;
  Realization<T> realization;
};

template <class T>
struct ClassificationReport {
  int n = 0;
  bool triangle = false;
  bool four_point = false;
  bool median = false;
  /// One entry per class, in kAllGraphClasses order.
  std::vector<ClassVerdict<T>> verdicts;
  /// Present when the triangle inequalities hold.
  std::optional<Bipartition> bipartition;
  /// Present when the planar recognizer rejected with a witness.
  std::optional<PlanarWitness> planar_witness;

  const Realization<T>& verdict(GraphClass cls) const;
  bool accepted(GraphClass cls) const { return verdict(cls).accepted(); }
};

/// Every predicate and every recognizer. Input errors raised inside one
/// recognizer become that class's rejection (condition "error").
template <class T>
ClassificationReport<T> classify(const DistanceFamily<T>& family);

/// Implications of the containment lattice that the report breaks, as
/// "premise=>conclusion" strings. Checked implications:
///   snake => caterpillar => tree => planar
///   pruned_polygon => polygon => planar
///   complete_bipartite => bipartite
///   every accepted class => arbitrary_connected
std::vector<std::string> lattice_violations(const std::vector<std::pair<GraphClass, bool>>& verdicts);

template <class T>
std::vector<std::string> lattice_violations(const ClassificationReport<T>& report) {
  std::vector<std::pair<GraphClass, bool>> verdicts;
  for (const auto& v : report.verdicts) verdicts.emplace_back(v.cls, v.realization.accepted());
  return lattice_violations(verdicts);
}

}  // namespace metric_realize

#endif  // METRIC_REALIZE_CLASSIFY_HPP
