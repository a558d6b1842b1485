#ifndef METRIC_REALIZE_REALIZATION_HPP
#define METRIC_REALIZE_REALIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "metric_realize/weighted_graph.hpp"

namespace metric_realize {

/// Why a recognizer said no: a short condition tag (for example
/// "four-point" or "cover-gap"), the indices involved, and free text.
struct Rejection {
  std::string condition;
  std::vector<int> indices;
  std::string detail;
};

/// Outcome of a recognizer. Accepted exactly when `graph` is present, in
/// which case the graph has been checked with verify_realization.
template <class T>
struct Realization {
  std::optional<WeightedGraph<T>> graph;
  std::optional<Rejection> rejection;

  bool accepted() const noexcept { return graph.has_value(); }

  static Realization accept(WeightedGraph<T> g) { return {std::move(g), std::nullopt}; }
  static Realization reject(Rejection r) { return {std::nullopt, std::move(r)}; }
  static Realization reject(std::string condition, std::vector<int> indices, std::string detail = {}) {
    return reject(Rejection{std::move(condition), std::move(indices), std::move(detail)});
  }
};

/// Accepts `graph` if it realizes `family`, otherwise a rejection tagged
/// "reconstruction-mismatch".
template <class T>
Realization<T> accept_if_verified(WeightedGraph<T> graph, const DistanceFamily<T>& family) {
  if (verify_realization(graph, family)) return Realization<T>::accept(std::move(graph));
  return Realization<T>::reject("reconstruction-mismatch", {},
                                "reconstructed graph does not reproduce the family");
}

}  // namespace metric_realize

#endif  // METRIC_REALIZE_REALIZATION_HPP
