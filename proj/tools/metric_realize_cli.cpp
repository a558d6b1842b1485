#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "metric_realize/metric_realize.h"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

struct FamilyDeleter {
  void operator()(mr_family* f) const { mr_family_free(f); }
};
struct GraphDeleter {
  void operator()(mr_graph* g) const { mr_graph_free(g); }
};
struct StringDeleter {
  void operator()(char* s) const { mr_string_free(s); }
};
using FamilyPtr = std::unique_ptr<mr_family, FamilyDeleter>;
using GraphPtr = std::unique_ptr<mr_graph, GraphDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

/// Non-OK, non-REJECTED statuses abort the command with an exit code.
struct CommandError {
  int exit_code;
  std::string message;
};

struct Options {
  bool exact = false;
  std::optional<double> tolerance;
  bool tolerance_mode = false;
  std::string format = "json";
};

bool tolerance_in_environment() {
  const char* env = std::getenv("METRIC_REALIZE_TOL");
  return env != nullptr && *env != '\0';
}

/// --float or --tol select tolerance mode; otherwise METRIC_REALIZE_TOL does unless --exact is given.
mr_mode mode_of(const Options& options) {
  if (options.tolerance_mode || options.tolerance) return MR_MODE_TOLERANCE;
  return !options.exact && tolerance_in_environment() ? MR_MODE_TOLERANCE : MR_MODE_EXACT;
}

/// --tol, then METRIC_REALIZE_TOL, then the library default.
double tolerance_of(const Options& options) {
  if (options.tolerance) return *options.tolerance;
  if (const char* env = std::getenv("METRIC_REALIZE_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || value < 0) {
      throw CommandError{kExitInputError, std::string("METRIC_REALIZE_TOL is not a nonnegative number: ") + env};
    }
    return value;
  }
  return -1.0;
}

void check(mr_status status) {
  switch (status) {
    case MR_OK:
    case MR_REJECTED:
      return;
    case MR_ERR_INPUT:
    case MR_ERR_ARGUMENT:
    case MR_ERR_SIZE_GUARD:
      throw CommandError{kExitInputError, mr_last_error()};
    case MR_ERR_INTERNAL:
      throw CommandError{kExitInternalError, mr_last_error()};
  }
  throw CommandError{kExitInternalError, "unknown status"};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kExitInputError, "cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FamilyPtr load_family(const std::string& path, const Options& options) {
  mr_family* raw = nullptr;
  check(mr_family_parse(read_input(path).c_str(), mode_of(options), tolerance_of(options), &raw));
  return FamilyPtr(raw);
}

GraphPtr load_graph(const std::string& path, const Options& options) {
  mr_graph* raw = nullptr;
  check(mr_graph_parse(read_input(path).c_str(), mode_of(options), &raw));
  return GraphPtr(raw);
}

void print_owned(char* text) {
  StringPtr owned(text);
  std::cout << owned.get();
}

void print_graph(const mr_graph* graph, const Options& options) {
  if (options.format == "csv") {
    FamilyPtr weights;
    mr_family* raw = nullptr;
    check(mr_two_weights(graph, tolerance_of(options), &raw));
    weights.reset(raw);
    char* text = nullptr;
    check(mr_family_serialize(weights.get(), MR_FAMILY_CSV, &text));
    print_owned(text);
    return;
  }
  char* text = nullptr;
  check(mr_graph_serialize(graph, options.format == "dot" ? MR_GRAPH_DOT : MR_GRAPH_JSON, &text));
  print_owned(text);
}

void print_family(const mr_family* family, const Options& options) {
  char* text = nullptr;
  check(mr_family_serialize(family, options.format == "json" ? MR_FAMILY_JSON : MR_FAMILY_CSV, &text));
  print_owned(text);
}

int report_rejection(mr_status status) {
  if (status == MR_REJECTED) {
    std::cerr << "rejected: " << mr_last_error() << "\n";
    return kExitRejected;
  }
  return kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize and reconstruct graphs from their shortest-path 2-weights"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", mr_version());

  Options options;
  app.add_flag("--exact", options.exact, "Exact rational arithmetic (default)");
  app.add_flag("--float", options.tolerance_mode, "Floating-point arithmetic with the default tolerance");
  app.add_option("--tol", options.tolerance, "Floating-point arithmetic with comparison slack tol * max value")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "csv"}));

  std::string graph_path;
  std::string family_path;
  std::string class_name;
  bool use_oracle = false;
  int n = 0;
  std::uint64_t seed = 0;
  int lo = 1;
  int hi = 20;
  bool decimal = false;
  const auto classes = CLI::IsMember({"snake", "caterpillar", "tree", "polygon", "pruned_polygon", "complete",
                                      "bipartite", "complete_bipartite", "cobipartite", "cobigraph", "bigraph",
                                      "planar", "arbitrary_connected"});

  auto* weights = app.add_subcommand("weights", "Print the 2-weights of a graph (csv by default)");
  weights->add_option("graph", graph_path, "Graph JSON, or - for stdin")->required();

  auto* check_cmd = app.add_subcommand("check", "Decide membership of a family in a class");
  check_cmd->add_option("--class", class_name, "Graph class")->required()->check(classes);
  check_cmd->add_flag("--oracle", use_oracle, "Use the exhaustive oracle (at most 7 vertices)");
  check_cmd->add_option("matrix", family_path, "Family matrix, or - for stdin")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Run every predicate and recognizer");
  classify_cmd->add_option("matrix", family_path, "Family matrix, or - for stdin")->required();

  auto* realize_cmd = app.add_subcommand("realize", "Reconstruct a realizing graph of a class");
  realize_cmd->add_option("--class", class_name, "Graph class")->required()->check(classes);
  realize_cmd->add_option("matrix", family_path, "Family matrix, or - for stdin")->required();

  auto* prune_cmd = app.add_subcommand("prune", "Remove useless edges from a graph");
  prune_cmd->add_option("graph", graph_path, "Graph JSON, or - for stdin")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random member of a class");
  gen_cmd->add_option("--class", class_name, "Graph class")->required()->check(classes);
  gen_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--lo", lo, "Smallest weight")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--hi", hi, "Largest weight")->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--decimal", decimal, "Weights on the 0.1 grid");

  auto* verify_cmd = app.add_subcommand("verify", "Check that a graph realizes a family");
  verify_cmd->add_option("graph", graph_path, "Graph JSON, or - for stdin")->required();
  verify_cmd->add_option("matrix", family_path, "Family matrix, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitAccepted : kExitInputError;
  }
  if (options.exact && mode_of(options) == MR_MODE_TOLERANCE) {
    std::cerr << "error: --exact conflicts with --tol/--float\n";
    return kExitInputError;
  }

  try {
    if (weights->parsed()) {
      const auto graph = load_graph(graph_path, options);
      mr_family* raw = nullptr;
      check(mr_two_weights(graph.get(), tolerance_of(options), &raw));
      const FamilyPtr family(raw);
      if (options.format == "dot") throw CommandError{kExitInputError, "weights prints csv or json"};
      Options family_options = options;
      if (!app.get_option("--format")->count()) family_options.format = "csv";
      print_family(family.get(), family_options);
      return kExitAccepted;
    }
    if (check_cmd->parsed()) {
      const auto family = load_family(family_path, options);
      const mr_status status = use_oracle ? mr_brute_force_check(family.get(), class_name.c_str())
                                          : mr_realize(family.get(), class_name.c_str(), nullptr, nullptr);
      check(status);
      std::cout << (status == MR_OK ? "accepted" : "rejected") << "\n";
      return report_rejection(status);
    }
    if (classify_cmd->parsed()) {
      const auto family = load_family(family_path, options);
      char* text = nullptr;
      check(mr_classify(family.get(), &text));
      print_owned(text);
      return kExitAccepted;
    }
    if (realize_cmd->parsed()) {
      const auto family = load_family(family_path, options);
      mr_graph* raw = nullptr;
      char* json = nullptr;
      const mr_status status = mr_realize(family.get(), class_name.c_str(), &raw, &json);
      const GraphPtr graph(raw);
      const StringPtr verdict(json);
      check(status);
      if (status == MR_OK) {
        print_graph(graph.get(), options);
      } else if (options.format == "json" && verdict) {
        std::cout << verdict.get();
      }
      return report_rejection(status);
    }
    if (prune_cmd->parsed()) {
      const auto graph = load_graph(graph_path, options);
      mr_graph* raw = nullptr;
      check(mr_prune(graph.get(), tolerance_of(options), &raw));
      const GraphPtr pruned(raw);
      print_graph(pruned.get(), options);
      return kExitAccepted;
    }
    if (gen_cmd->parsed()) {
      mr_graph* raw = nullptr;
      check(mr_generate(class_name.c_str(), n, seed, lo, hi, decimal ? 1 : 0, &raw));
      GraphPtr graph(raw);
      if (mode_of(options) == MR_MODE_TOLERANCE) {
        mr_graph* converted = nullptr;
        check(mr_graph_convert(graph.get(), MR_MODE_TOLERANCE, &converted));
        graph.reset(converted);
      }
      print_graph(graph.get(), options);
      return kExitAccepted;
    }
    if (verify_cmd->parsed()) {
      if (graph_path == "-" && family_path == "-") {
        throw CommandError{kExitInputError, "only one input can come from stdin"};
      }
      const auto graph = load_graph(graph_path, options);
      const auto family = load_family(family_path, options);
      const mr_status status = mr_verify(graph.get(), family.get());
      check(status);
      std::cout << (status == MR_OK ? "realizes" : "does not realize") << "\n";
      return status == MR_OK ? kExitAccepted : kExitRejected;
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitInputError;
}
