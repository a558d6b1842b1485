#ifndef METRIC_REALIZE_GRAPH_CLASS_HPP
#define METRIC_REALIZE_GRAPH_CLASS_HPP

#include <array>
#include <optional>
#include <string_view>

namespace metric_realize {

enum class GraphClass {
  kSnake,
  kCaterpillar,
  kTree,
  kPolygon,
  kPrunedPolygon,
  kComplete,
  kBipartite,
  kCompleteBipartite,
  kPlanar,
  kArbitraryConnected,
};

inline constexpr std::array<GraphClass, 10> kAllGraphClasses{
    GraphClass::kSnake,    GraphClass::kCaterpillar,      GraphClass::kTree,
    GraphClass::kPolygon,  GraphClass::kPrunedPolygon,    GraphClass::kComplete,
    GraphClass::kBipartite, GraphClass::kCompleteBipartite, GraphClass::kPlanar,
    GraphClass::kArbitraryConnected};

/// Lower-case names used by the CLI and reports, e.g. "complete_bipartite".
std::string_view class_name(GraphClass cls);
std::optional<GraphClass> parse_class(std::string_view name);

/// Smallest vertex count for which the class is defined.
int class_min_vertices(GraphClass cls);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_GRAPH_CLASS_HPP
