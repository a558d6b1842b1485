#ifndef METRIC_REALIZE_IO_HPP
#define METRIC_REALIZE_IO_HPP

#include <string>
#include <string_view>

#include "metric_realize/classify.hpp"

namespace metric_realize {

/// Text formats. Vertices are numbered from 1 in every format.
///
/// Family CSV: n lines of n comma-separated values, zero diagonal. Blank
/// lines and lines starting with '#' are skipped.
/// Family JSON: {"n": int, "entries": [[...], ...]}, entries numbers or
/// numeric strings.
/// Graph JSON: {"n": int, "edges": [{"u": int, "v": int, "w": string}]}.
/// Graph DOT: undirected graph, edge attribute label=weight.
///
/// Weights are written as decimal strings, or "p/q" for rationals without
/// a finite decimal expansion.
enum class FamilyFormat { kCsv, kJson };
enum class GraphFormat { kJson, kDot };

/// Parses a family matrix; JSON when the first non-blank character is '{',
/// CSV otherwise. Errors name the offending cell, 1-based:
/// "asymmetric at (i,j)", "nonpositive 2-weight at (i,j)",
/// "nonzero diagonal at (i,i)", "malformed number at (i,j)".
/// Symmetry is compared with the family's comparison slack.
template <class T>
DistanceFamily<T> parse_family(std::string_view text, double tolerance = NumberTraits<T>::kDefaultTolerance);

template <class T>
std::string serialize_family(const DistanceFamily<T>& family, FamilyFormat format);

/// Parses graph JSON. Connectivity is not required here.
template <class T>
WeightedGraph<T> parse_graph(std::string_view text);

template <class T>
std::string serialize_graph(const WeightedGraph<T>& graph, GraphFormat format);

/// {"accepted": bool, "graph": {...}} or
/// {"accepted": false, "condition": ..., "indices": [...], "detail": ...}.
template <class T>
std::string realization_json(const Realization<T>& realization);

/// {"kind": "K5" | "K33", "hubs": [...], "chains": [{"a", "b", "interior"}]}.
std::string witness_json(const PlanarWitness& witness);

template <class T>
std::string report_json(const ClassificationReport<T>& report);

}  // namespace metric_realize

#endif  // METRIC_REALIZE_IO_HPP
