#include "metric_realize/metric_realize.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "metric_realize/errors.hpp"
#include "metric_realize/generators.hpp"
#include "metric_realize/io.hpp"
#include "metric_realize/oracles.hpp"

using metric_realize::DistanceFamily;
using metric_realize::Rational;
using metric_realize::WeightedGraph;

struct mr_family {
  std::variant<DistanceFamily<Rational>, DistanceFamily<double>> value;
};

struct mr_graph {
  std::variant<WeightedGraph<Rational>, WeightedGraph<double>> value;
};

namespace {

thread_local std::string last_error;

mr_status fail(mr_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs body, translating exceptions into status codes.
template <class Body>
mr_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const metric_realize::SizeGuardExceeded& e) {
    return fail(MR_ERR_SIZE_GUARD, e.what());
  } catch (const metric_realize::InvalidInput& e) {
    return fail(MR_ERR_INPUT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MR_ERR_INPUT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(MR_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MR_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  auto* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

double effective_tolerance(double tolerance) {
  return tolerance < 0 ? metric_realize::kDefaultTolerance : tolerance;
}

std::optional<metric_realize::GraphClass> lookup_class(const char* name) {
  if (name == nullptr) return std::nullopt;
  return metric_realize::parse_class(name);
}

}  // namespace

extern "C" {

const char* mr_last_error(void) { return last_error.c_str(); }

const char* mr_status_name(mr_status status) {
  switch (status) {
    case MR_OK:
      return "ok";
    case MR_REJECTED:
      return "rejected";
    case MR_ERR_INPUT:
      return "input error";
    case MR_ERR_SIZE_GUARD:
      return "size guard exceeded";
    case MR_ERR_ARGUMENT:
      return "invalid argument";
    case MR_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* mr_version(void) { return "0.1.0"; }

void mr_string_free(char* text) { std::free(text); }

mr_status mr_family_parse(const char* text, mr_mode mode, double tolerance, mr_family** out) {
  if (text == nullptr || out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (mode == MR_MODE_EXACT) {
      *out = new mr_family{metric_realize::parse_family<Rational>(text)};
    } else {
      *out = new mr_family{metric_realize::parse_family<double>(text, effective_tolerance(tolerance))};
    }
    return MR_OK;
  });
}

void mr_family_free(mr_family* family) { delete family; }

int mr_family_size(const mr_family* family) {
  if (family == nullptr) return 0;
  return std::visit([](const auto& f) { return f.size(); }, family->value);
}

mr_mode mr_family_mode(const mr_family* family) {
  return family != nullptr && family->value.index() == 1 ? MR_MODE_TOLERANCE : MR_MODE_EXACT;
}

mr_status mr_family_value(const mr_family* family, int i, int j, char** out) {
  if (family == nullptr || out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f(0, 0))>;
          return copy_string(metric_realize::NumberTraits<T>::format(f.at(i - 1, j - 1)));
        },
        family->value);
    return MR_OK;
  });
}

mr_status mr_family_serialize(const mr_family* family, mr_family_format format, char** out) {
  if (family == nullptr || out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto kind = format == MR_FAMILY_JSON ? metric_realize::FamilyFormat::kJson : metric_realize::FamilyFormat::kCsv;
    *out = copy_string(std::visit([&](const auto& f) { return metric_realize::serialize_family(f, kind); }, family->value));
    return MR_OK;
  });
}

mr_status mr_graph_parse(const char* json, mr_mode mode, mr_graph** out) {
  if (json == nullptr || out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (mode == MR_MODE_EXACT) {
      *out = new mr_graph{metric_realize::parse_graph<Rational>(json)};
    } else {
      *out = new mr_graph{metric_realize::parse_graph<double>(json)};
    }
    return MR_OK;
  });
}

void mr_graph_free(mr_graph* graph) { delete graph; }

int mr_graph_size(const mr_graph* graph) {
  if (graph == nullptr) return 0;
  return std::visit([](const auto& g) { return g.size(); }, graph->value);
}

size_t mr_graph_edge_count(const mr_graph* graph) {
  if (graph == nullptr) return 0;
  return std::visit([](const auto& g) { return g.edge_count(); }, graph->value);
}

mr_mode mr_graph_mode(const mr_graph* graph) {
  return graph != nullptr && graph->value.index() == 1 ? MR_MODE_TOLERANCE : MR_MODE_EXACT;
}

mr_status mr_graph_serialize(const mr_graph* graph, mr_graph_format format, char** out) {
  if (graph == nullptr || out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto kind = format == MR_GRAPH_DOT ? metric_realize::GraphFormat::kDot : metric_realize::GraphFormat::kJson;
    *out = copy_string(std::visit([&](const auto& g) { return metric_realize::serialize_graph(g, kind); }, graph->value));
    return MR_OK;
  });
}

mr_status mr_graph_convert(const mr_graph* graph, mr_mode mode, mr_graph** out) {
  if (graph == nullptr || out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = std::visit(
        [&](const auto& g) {
          if (mode == MR_MODE_EXACT) return new mr_graph{metric_realize::convert_graph<Rational>(g)};
          return new mr_graph{metric_realize::convert_graph<double>(g)};
        },
        graph->value);
    return MR_OK;
  });
}

mr_status mr_two_weights(const mr_graph* graph, double tolerance, mr_family** out) {
  if (graph == nullptr || out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g.edges().front().w)>;
          const double tol = metric_realize::NumberTraits<T>::kMode == metric_realize::CompareMode::kExact
                                 ? 0.0
                                 : effective_tolerance(tolerance);
          return new mr_family{metric_realize::two_weights(g, tol)};
        },
        graph->value);
    return MR_OK;
  });
}

mr_status mr_prune(const mr_graph* graph, double tolerance, mr_graph** out) {
  if (graph == nullptr || out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g.edges().front().w)>;
          const double tol = metric_realize::NumberTraits<T>::kMode == metric_realize::CompareMode::kExact
                                 ? 0.0
                                 : effective_tolerance(tolerance);
          return new mr_graph{metric_realize::prune(g, tol)};
        },
        graph->value);
    return MR_OK;
  });
}

mr_status mr_verify(const mr_graph* graph, const mr_family* family) {
  if (graph == nullptr || family == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  if (graph->value.index() != family->value.index()) return fail(MR_ERR_ARGUMENT, "graph and family modes differ");
  return guarded([&] {
    const bool realizes = std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          using T = std::decay_t<decltype(g.edges().front().w)>;
          static_assert(std::is_same_v<G, WeightedGraph<T>>);
          return metric_realize::verify_realization(g, std::get<DistanceFamily<T>>(family->value));
        },
        graph->value);
    return realizes ? MR_OK : fail(MR_REJECTED, "graph does not realize the family");
  });
}

mr_status mr_realize(const mr_family* family, const char* class_name, mr_graph** out_graph, char** out_json) {
  if (family == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  const auto cls = lookup_class(class_name);
  if (!cls) return fail(MR_ERR_ARGUMENT, std::string("unknown class '") + (class_name ? class_name : "") + "'");
  if (out_graph != nullptr) *out_graph = nullptr;
  if (out_json != nullptr) *out_json = nullptr;
  return guarded([&] {
    return std::visit(
        [&](const auto& f) {
          const auto verdict = metric_realize::realize(f, *cls);
          if (out_json != nullptr) *out_json = copy_string(metric_realize::realization_json(verdict));
          if (!verdict.accepted()) {
            const auto& why = *verdict.rejection;
            return fail(MR_REJECTED, why.condition + (why.detail.empty() ? "" : ": " + why.detail));
          }
          if (out_graph != nullptr) *out_graph = new mr_graph{*verdict.graph};
          return MR_OK;
        },
        family->value);
  });
}

mr_status mr_brute_force_check(const mr_family* family, const char* class_name) {
  if (family == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  const auto cls = lookup_class(class_name);
  if (!cls) return fail(MR_ERR_ARGUMENT, std::string("unknown class '") + (class_name ? class_name : "") + "'");
  return guarded([&] {
    const bool found =
        std::visit([&](const auto& f) { return metric_realize::brute_force_class_check(f, *cls); }, family->value);
    return found ? MR_OK : fail(MR_REJECTED, "no realization in the class");
  });
}

mr_status mr_classify(const mr_family* family, char** out_json) {
  if (family == nullptr || out_json == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out_json = copy_string(std::visit(
        [](const auto& f) { return metric_realize::report_json(metric_realize::classify(f)); }, family->value));
    return MR_OK;
  });
}

mr_status mr_generate(const char* class_name, int n, uint64_t seed, int lo, int hi, int decimal_grid, mr_graph** out) {
  if (out == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  const auto cls = lookup_class(class_name);
  if (!cls) return fail(MR_ERR_ARGUMENT, std::string("unknown class '") + (class_name ? class_name : "") + "'");
  return guarded([&] {
    metric_realize::GenSpec spec;
    spec.cls = *cls;
    spec.n = n;
    spec.seed = seed;
    spec.weights.kind =
        decimal_grid != 0 ? metric_realize::WeightModel::Kind::kDecimalGrid : metric_realize::WeightModel::Kind::kInteger;
    spec.weights.lo = lo;
    spec.weights.hi = hi;
    *out = new mr_graph{metric_realize::generate(spec)};
    return MR_OK;
  });
}

mr_status mr_witness_search(const mr_graph* graph, char** out_json) {
  if (graph == nullptr || out_json == nullptr) return fail(MR_ERR_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] {
    const auto witness =
        std::visit([](const auto& g) { return metric_realize::subdivision_witness_search(g); }, graph->value);
    if (!witness) return fail(MR_REJECTED, "no Kuratowski subdivision");
    *out_json = copy_string(metric_realize::witness_json(*witness));
    return MR_OK;
  });
}

}  // extern "C"
