#ifndef METRIC_REALIZE_H
#define METRIC_REALIZE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MR_API __declspec(dllexport)
#else
#define MR_API __attribute__((visibility("default")))
#endif

/* Vertices are numbered from 1. Strings returned through char** outputs
 * are owned by the caller and released with mr_string_free. Handles are
 * released with their *_free function; freeing NULL is a no-op. */

typedef struct mr_family mr_family;
typedef struct mr_graph mr_graph;

typedef enum mr_status {
  MR_OK = 0,
  MR_REJECTED = 1,        /* valid input, negative verdict */
  MR_ERR_INPUT = 2,       /* malformed or invalid data */
  MR_ERR_SIZE_GUARD = 3,  /* exhaustive search refused above its limit */
  MR_ERR_ARGUMENT = 4,    /* NULL pointer, unknown class, mode mismatch */
  MR_ERR_INTERNAL = 5
} mr_status;

typedef enum mr_mode {
  MR_MODE_EXACT = 0,     /* rational arithmetic, equality is exact */
  MR_MODE_TOLERANCE = 1  /* double arithmetic, slack tolerance * max value */
} mr_mode;

typedef enum mr_family_format { MR_FAMILY_CSV = 0, MR_FAMILY_JSON = 1 } mr_family_format;
typedef enum mr_graph_format { MR_GRAPH_JSON = 0, MR_GRAPH_DOT = 1 } mr_graph_format;

/* Message for the last failing call on this thread; "" if none. */
MR_API const char* mr_last_error(void);
MR_API const char* mr_status_name(mr_status status);
MR_API const char* mr_version(void);
MR_API void mr_string_free(char* text);

/* Families. tolerance is ignored in exact mode; a negative value selects
 * the default of 1e-9. */
MR_API mr_status mr_family_parse(const char* text, mr_mode mode, double tolerance, mr_family** out);
MR_API void mr_family_free(mr_family* family);
MR_API int mr_family_size(const mr_family* family);
MR_API mr_mode mr_family_mode(const mr_family* family);
MR_API mr_status mr_family_value(const mr_family* family, int i, int j, char** out);
MR_API mr_status mr_family_serialize(const mr_family* family, mr_family_format format, char** out);

/* Graphs. Parsing does not require connectivity. */
MR_API mr_status mr_graph_parse(const char* json, mr_mode mode, mr_graph** out);
MR_API void mr_graph_free(mr_graph* graph);
MR_API int mr_graph_size(const mr_graph* graph);
MR_API size_t mr_graph_edge_count(const mr_graph* graph);
MR_API mr_mode mr_graph_mode(const mr_graph* graph);
MR_API mr_status mr_graph_serialize(const mr_graph* graph, mr_graph_format format, char** out);
/* Copy of graph in the given arithmetic mode. */
MR_API mr_status mr_graph_convert(const mr_graph* graph, mr_mode mode, mr_graph** out);

/* Shortest-path 2-weights; MR_ERR_INPUT when the graph is disconnected. */
MR_API mr_status mr_two_weights(const mr_graph* graph, double tolerance, mr_family** out);
/* Removes every useless edge. */
MR_API mr_status mr_prune(const mr_graph* graph, double tolerance, mr_graph** out);
/* MR_OK when graph realizes family, MR_REJECTED otherwise. */
MR_API mr_status mr_verify(const mr_graph* graph, const mr_family* family);

/* Recognizer for class_name (snake, caterpillar, tree, polygon,
 * pruned_polygon, complete, bipartite, complete_bipartite, planar,
 * arbitrary_connected). MR_OK with *out_graph set on acceptance;
 * MR_REJECTED otherwise. out_json (optional) receives the verdict JSON. */
MR_API mr_status mr_realize(const mr_family* family, const char* class_name, mr_graph** out_graph, char** out_json);

/* Exhaustive oracle, at most 7 vertices. MR_OK or MR_REJECTED. */
MR_API mr_status mr_brute_force_check(const mr_family* family, const char* class_name);

/* Report JSON with every predicate and class verdict. */
MR_API mr_status mr_classify(const mr_family* family, char** out_json);

/* Seeded random member of a class, in exact mode, with integer weights in [lo, hi], or
 * multiples of 0.1 in [lo, hi] when decimal_grid is nonzero. */
MR_API mr_status mr_generate(const char* class_name, int n, uint64_t seed, int lo, int hi, int decimal_grid,
                             mr_graph** out);

/* Kuratowski subdivision search on at most 10 vertices. MR_OK with the
 * witness JSON when one exists, MR_REJECTED when the graph is planar. */
MR_API mr_status mr_witness_search(const mr_graph* graph, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* METRIC_REALIZE_H */
