#include "metric_realize/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "metric_realize/errors.hpp"

namespace metric_realize {
namespace {

using Json = nlohmann::ordered_json;

std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string_view trim(std::string_view text) {
  const auto blank = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && blank(text.front())) text.remove_prefix(1);
  while (!text.empty() && blank(text.back())) text.remove_suffix(1);
  return text;
}

template <class T>
T parse_cell_text(std::string_view text, const std::string& where) {
  try {
    return NumberTraits<T>::parse(trim(text));
  } catch (const std::exception&) {
    throw InvalidInput("malformed number at " + where + ": '" + std::string(trim(text)) + "'");
  }
}

template <class T>
T parse_cell(std::string_view text, std::size_t i, std::size_t j) {
  return parse_cell_text<T>(text, cell_name(i, j));
}

/// JSON numbers keep their shortest decimal spelling, so 0.1 stays exact.
template <class T>
T parse_json_number(const Json& value, const std::string& where) {
  if (value.is_string()) return parse_cell_text<T>(value.get<std::string>(), where);
  if (value.is_number()) return parse_cell_text<T>(value.dump(), where);
  throw InvalidInput("malformed number at " + where);
}

template <class T>
std::vector<std::vector<T>> parse_csv_rows(std::string_view text) {
  std::vector<std::vector<T>> rows;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::size_t i = rows.size();
    std::vector<T> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto cell = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      row.push_back(parse_cell<T>(cell, i, row.size()));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
std::vector<std::vector<T>> parse_json_rows(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw InvalidInput("family JSON needs an \"entries\" matrix");
  }
  std::vector<std::vector<T>> rows;
  for (const auto& json_row : doc["entries"]) {
    if (!json_row.is_array()) throw InvalidInput("row " + std::to_string(rows.size() + 1) + " is not an array");
    std::vector<T> row;
    for (const auto& value : json_row) {
      row.push_back(parse_json_number<T>(value, cell_name(rows.size(), row.size())));
    }
    rows.push_back(std::move(row));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(rows.size())) {
      throw InvalidInput("\"n\" does not match the number of rows");
    }
  }
  return rows;
}

template <class T>
std::string weight_text(const T& w) {
  return NumberTraits<T>::format(w);
}

template <class T>
Json graph_to_json(const WeightedGraph<T>& graph) {
  Json edges = Json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"w", weight_text(e.w)}});
  }
  return {{"n", graph.size()}, {"edges", std::move(edges)}};
}

Json one_based(const std::vector<int>& indices) {
  Json out = Json::array();
  for (const int i : indices) out.push_back(i + 1);
  return out;
}

template <class T>
Json realization_to_json(const Realization<T>& realization) {
  if (realization.accepted()) return {{"accepted", true}, {"graph", graph_to_json(*realization.graph)}};
  Json out{{"accepted", false}};
  if (realization.rejection) {
    out["condition"] = realization.rejection->condition;
    out["indices"] = one_based(realization.rejection->indices);
    out["detail"] = realization.rejection->detail;
  }
  return out;
}

Json witness_to_json(const PlanarWitness& witness) {
  Json chains = Json::array();
  for (const auto& chain : witness.chains) {
    chains.push_back({{"a", chain.a + 1}, {"b", chain.b + 1}, {"interior", one_based(chain.interior)}});
  }
  return {{"kind", witness.kind == KuratowskiKind::kK5 ? "K5" : "K33"},
          {"hubs", one_based(witness.hubs)},
          {"chains", std::move(chains)}};
}

}  // namespace

std::string witness_json(const PlanarWitness& witness) { return witness_to_json(witness).dump(2) + "\n"; }

template <class T>
DistanceFamily<T> parse_family(std::string_view text, double tolerance) {
  const auto body = trim(text);
  const auto rows = !body.empty() && body.front() == '{' ? parse_json_rows<T>(body) : parse_csv_rows<T>(body);
  const std::size_t n = rows.size();
  if (n < 2) throw InvalidInput("family needs at least 2 rows, got " + std::to_string(n));
  T largest{};
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InvalidInput("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                         " entries, expected " + std::to_string(n));
    }
    for (const auto& v : rows[i]) largest = std::max(largest, NumberTraits<T>::magnitude(v));
  }
  const Comparator<T> cmp(NumberTraits<T>::from_tolerance(tolerance, largest));
  std::vector<T> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        if (!cmp.is_zero(rows[i][i])) throw InvalidInput("nonzero diagonal at " + cell_name(i, i));
      } else if (i < j) {
        if (!cmp.eq(rows[i][j], rows[j][i])) throw InvalidInput("asymmetric at " + cell_name(i, j));
        if (!(rows[i][j] > T(0)) || !(rows[j][i] > T(0))) {
          throw InvalidInput("nonpositive 2-weight at " + cell_name(i, j));
        }
        upper.push_back(rows[i][j]);
      }
    }
  }
  return DistanceFamily<T>(static_cast<int>(n), upper, tolerance);
}

template <class T>
std::string serialize_family(const DistanceFamily<T>& family, FamilyFormat format) {
  const int n = family.size();
  if (format == FamilyFormat::kJson) {
    Json entries = Json::array();
    for (int i = 0; i < n; ++i) {
      Json row = Json::array();
      for (int j = 0; j < n; ++j) row.push_back(weight_text(family(i, j)));
      entries.push_back(std::move(row));
    }
    return Json{{"n", n}, {"entries", std::move(entries)}}.dump(2) + "\n";
  }
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out += ',';
      out += weight_text(family(i, j));
    }
    out += '\n';
  }
  return out;
}

template <class T>
WeightedGraph<T> parse_graph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("edges") ||
      !doc["edges"].is_array()) {
    throw InvalidInput("graph JSON needs an integer \"n\" and an \"edges\" array");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > 1'000'000) throw InvalidInput("graph size out of range: " + std::to_string(n));
  std::vector<Edge<T>> edges;
  for (const auto& record : doc["edges"]) {
    const std::string where = "edge " + std::to_string(edges.size() + 1);
    if (!record.is_object() || !record.contains("u") || !record.contains("v") || !record.contains("w") ||
        !record["u"].is_number_integer() || !record["v"].is_number_integer()) {
      throw InvalidInput(where + " needs integer \"u\", \"v\" and a weight \"w\"");
    }
    const auto u = record["u"].get<long long>();
    const auto v = record["v"].get<long long>();
    if (u < 1 || u > n || v < 1 || v > n) throw InvalidInput(where + " has an endpoint outside [1, n]");
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), parse_json_number<T>(record["w"], where)});
  }
  return WeightedGraph<T>::unverified(static_cast<int>(n), std::move(edges));
}

template <class T>
std::string serialize_graph(const WeightedGraph<T>& graph, GraphFormat format) {
  if (format == GraphFormat::kJson) return graph_to_json(graph).dump(2) + "\n";
  std::string out = "graph G {\n";
  for (int v = 0; v < graph.size(); ++v) out += "  " + std::to_string(v + 1) + ";\n";
  for (const auto& e : graph.edges()) {
    out += "  " + std::to_string(e.u + 1) + " -- " + std::to_string(e.v + 1) + " [label=\"" + weight_text(e.w) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

template <class T>
std::string realization_json(const Realization<T>& realization) {
  return realization_to_json(realization).dump(2) + "\n";
}

template <class T>
std::string report_json(const ClassificationReport<T>& report) {
  Json out{{"n", report.n},
           {"mode", NumberTraits<T>::kMode == CompareMode::kExact ? "exact" : "tolerance"},
           {"predicates", {{"triangle", report.triangle}, {"four_point", report.four_point}, {"median", report.median}}}};
  Json classes = Json::object();
  for (const auto& v : report.verdicts) classes[std::string(class_name(v.cls))] = realization_to_json(v.realization);
  out["classes"] = std::move(classes);
  if (report.bipartition) {
    const auto& sides = *report.bipartition;
    out["bipartition"] = {{"base_pair", one_based({sides.base_pair.first, sides.base_pair.second})},
                          {"x_side", one_based(sides.x_side)},
                          {"y_side", one_based(sides.y_side)}};
  }
  if (report.planar_witness) out["planar_witness"] = witness_to_json(*report.planar_witness);
  const auto broken = lattice_violations(report);
  out["lattice_consistent"] = broken.empty();
  return out.dump(2) + "\n";
}

#define METRIC_REALIZE_INSTANTIATE(T)                                                       \
  template DistanceFamily<T> parse_family(std::string_view, double);                       \
  template std::string serialize_family(const DistanceFamily<T>&, FamilyFormat);           \
  template WeightedGraph<T> parse_graph(std::string_view);                                 \
  template std::string serialize_graph(const WeightedGraph<T>&, GraphFormat);              \
  template std::string realization_json(const Realization<T>&);                            \
  template std::string report_json(const ClassificationReport<T>&);

METRIC_REALIZE_INSTANTIATE(Rational)
METRIC_REALIZE_INSTANTIATE(double)

#undef METRIC_REALIZE_INSTANTIATE

}  // namespace metric_realize
