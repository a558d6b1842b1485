#include "metric_realize/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "metric_realize/cyclic_recognizers.hpp"
#include "metric_realize/errors.hpp"
#include "metric_realize/tree_recognizers.hpp"

namespace metric_realize {

template <class T>
Realization<T> realize(const DistanceFamily<T>& family, GraphClass cls) {
  if (family.size() < class_min_vertices(cls)) {
    return Realization<T>::reject("size", {}, std::string(class_name(cls)) + " needs at least " +
                                                  std::to_string(class_min_vertices(cls)) + " vertices");
  }
  switch (cls) {
    case GraphClass::kSnake:
      return snake_check(family);
    case GraphClass::kCaterpillar:
      return caterpillar_check(family);
    case GraphClass::kTree:
      return tree_check(family);
    case GraphClass::kPolygon:
      return polygon_check(family);
    case GraphClass::kPrunedPolygon:
      return pruned_polygon_check(family);
    case GraphClass::kComplete:
      return complete_check(family);
    case GraphClass::kBipartite:
      return bigraph_check(family);
    case GraphClass::kCompleteBipartite:
      return cobigraph_check(family);
    case GraphClass::kPlanar:
      return planar_check(family).realization;
    case GraphClass::kArbitraryConnected: {
      if (auto report = check_triangle(family, 1); !report.holds) {
        return Realization<T>::reject("triangle", report.violations.front().indices);
      }
      return accept_if_verified(support_graph(family), family);
    }
  }
  throw std::invalid_argument("unknown graph class");
}

template <class T>
const Realization<T>& ClassificationReport<T>::verdict(GraphClass cls) const {
  const auto it = std::find_if(verdicts.begin(), verdicts.end(), [cls](const auto& v) { return v.cls == cls; });
  if (it == verdicts.end()) throw std::out_of_range("class missing from report");
  return it->realization;
}

template <class T>
ClassificationReport<T> classify(const DistanceFamily<T>& family) {
  ClassificationReport<T> report;
  report.n = family.size();
  report.triangle = check_triangle(family, 0).holds;
  report.four_point = check_four_point(family, 0).holds;
  report.median = check_median(family, 0).holds;
  if (report.triangle) report.bipartition = bipartition(family);

  for (const GraphClass cls : kAllGraphClasses) {
    try {
      if (cls == GraphClass::kPlanar && family.size() >= class_min_vertices(cls)) {
        auto verdict = planar_check(family);
        report.planar_witness = std::move(verdict.witness);
        report.verdicts.push_back({cls, std::move(verdict.realization)});
      } else {
        report.verdicts.push_back({cls, realize(family, cls)});
      }
    } catch (const InvalidInput& e) {
      report.verdicts.push_back({cls, Realization<T>::reject("error", {}, e.what())});
    } catch (const SizeGuardExceeded& e) {
      report.verdicts.push_back({cls, Realization<T>::reject("error", {}, e.what())});
    }
  }
  return report;
}

std::vector<std::string> lattice_violations(const std::vector<std::pair<GraphClass, bool>>& verdicts) {
  const auto accepted = [&](GraphClass cls) {
    const auto it = std::find_if(verdicts.begin(), verdicts.end(), [cls](const auto& v) { return v.first == cls; });
    return it != verdicts.end() && it->second;
  };
  std::vector<std::pair<GraphClass, GraphClass>> implications{
      {GraphClass::kSnake, GraphClass::kCaterpillar},
      {GraphClass::kCaterpillar, GraphClass::kTree},
      {GraphClass::kTree, GraphClass::kPlanar},
      {GraphClass::kPrunedPolygon, GraphClass::kPolygon},
      {GraphClass::kPolygon, GraphClass::kPlanar},
      {GraphClass::kCompleteBipartite, GraphClass::kBipartite},
  };
  for (const GraphClass cls : kAllGraphClasses) {
    if (cls != GraphClass::kArbitraryConnected) implications.emplace_back(cls, GraphClass::kArbitraryConnected);
  }
  std::vector<std::string> broken;
  for (const auto& [premise, conclusion] : implications) {
    if (accepted(premise) && !accepted(conclusion)) {
      broken.push_back(std::string(class_name(premise)) + "=>" + std::string(class_name(conclusion)));
    }
  }
  return broken;
}

#define METRIC_REALIZE_INSTANTIATE(T)                                            \
  template Realization<T> realize(const DistanceFamily<T>&, GraphClass);        \
  template struct ClassificationReport<T>;                                      \
  template ClassificationReport<T> classify(const DistanceFamily<T>&);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize
