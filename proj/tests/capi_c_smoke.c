#include <stdio.h>
#include <string.h>

#include "metric_realize/metric_realize.h"

int main(void) {
  mr_family* family = NULL;
  mr_graph* graph = NULL;
  char* json = NULL;
  int failures = 0;

  if (mr_family_parse("0,1,2\n1,0,1\n2,1,0\n", MR_MODE_EXACT, -1.0, &family) != MR_OK) {
    fprintf(stderr, "parse: %s\n", mr_last_error());
    return 1;
  }
  if (mr_realize(family, "tree", &graph, &json) != MR_OK) ++failures;
  if (json == NULL || strstr(json, "\"accepted\"") == NULL) ++failures;
  if (graph == NULL || mr_verify(graph, family) != MR_OK) ++failures;

  mr_string_free(json);
  mr_graph_free(graph);
  mr_family_free(family);
  printf("%s\n", failures == 0 ? "ok" : "failed");
  return failures == 0 ? 0 : 1;
}
