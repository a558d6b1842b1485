#include "metric_realize/graph_class.hpp"

namespace metric_realize {

std::string_view class_name(GraphClass cls) {
  switch (cls) {
    case GraphClass::kSnake: return "snake";
    case GraphClass::kCaterpillar: return "caterpillar";
    case GraphClass::kTree: return "tree";
    case GraphClass::kPolygon: return "polygon";
    case GraphClass::kPrunedPolygon: return "pruned_polygon";
    case GraphClass::kComplete: return "complete";
    case GraphClass::kBipartite: return "bipartite";
    case GraphClass::kCompleteBipartite: return "complete_bipartite";
    case GraphClass::kPlanar: return "planar";
    case GraphClass::kArbitraryConnected: return "arbitrary_connected";
  }
  return "unknown";
}

std::optional<GraphClass> parse_class(std::string_view name) {
  for (const auto cls : kAllGraphClasses) {
    if (class_name(cls) == name) return cls;
  }
  if (name == "cobipartite" || name == "cobigraph") return GraphClass::kCompleteBipartite;
  if (name == "bigraph") return GraphClass::kBipartite;
  return std::nullopt;
}

int class_min_vertices(GraphClass cls) {
  switch (cls) {
    case GraphClass::kPolygon:
    case GraphClass::kPrunedPolygon:
      return 3;
    default:
      return 2;
  }
}

}  // namespace metric_realize
