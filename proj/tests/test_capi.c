#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gkmlab/gkmlab.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

static void permutahedron(void) {
  gkm_graph* g = NULL;
  EXPECT(gkm_graph_open("sn:3", &g) == GKM_OK);
  if (!g) return;
  EXPECT(gkm_graph_num_vertices(g) == 6);
  EXPECT(gkm_graph_dim(g) == 2);
  EXPECT(gkm_graph_valence(g) == 3);

  int expected[] = {1, 4, 9, 15, 21};
  for (int m = 0; m < 5; ++m) {
    int d = -1;
    EXPECT(gkm_graph_dim_h(g, m, &d) == GKM_OK);
    EXPECT(d == expected[m]);
  }

  int betti[8];
  int len = 0;
  EXPECT(gkm_graph_betti(g, betti, 8, &len) == GKM_OK);
  EXPECT(len == 4);
  EXPECT(betti[0] == 1 && betti[1] == 2 && betti[2] == 2 && betti[3] == 1);

  char* out = NULL;
  EXPECT(gkm_run(g, "package", NULL, GKM_FORMAT_JSON, &out) == GKM_OK);
  EXPECT(out != NULL && strstr(out, "\"verdict\": \"PASS\"") != NULL);
  gkm_string_free(out);

  out = NULL;
  EXPECT(gkm_run(g, "cohdim", "{\"max_degree\": 2}", GKM_FORMAT_TABLE, &out) == GKM_OK);
  EXPECT(out != NULL && strstr(out, "verdict: PASS") != NULL);
  gkm_string_free(out);

  out = NULL;
  EXPECT(gkm_run(g, "cohdim", "{\"bogus\": 1}", GKM_FORMAT_JSON, &out) == GKM_INPUT_ERROR);
  EXPECT(out == NULL);
  EXPECT(gkm_run(g, "frobnicate", NULL, GKM_FORMAT_JSON, &out) == GKM_INPUT_ERROR);
  EXPECT(strlen(gkm_last_error()) > 0);

  EXPECT(gkm_graph_set_xi(g, "1,2,3") == GKM_INPUT_ERROR);
  EXPECT(gkm_graph_set_xi(g, "1,-1") == GKM_OK);
  out = NULL;
  EXPECT(gkm_run(g, "morse", NULL, GKM_FORMAT_JSON, &out) == GKM_NEGATIVE);
  EXPECT(out != NULL);
  gkm_string_free(out);
  out = NULL;
  EXPECT(gkm_run(g, "thom", NULL, GKM_FORMAT_JSON, &out) == GKM_PRECONDITION);
  EXPECT(out == NULL);
  gkm_graph_free(g);
}

static void from_json(void) {
  const char* text =
      "{\"dim\":1,\"basis\":[\"t\"],\"vertices\":[\"p\",\"q\"],"
      "\"edges\":[{\"src\":\"p\",\"dst\":\"q\",\"alpha\":[\"1\"]}]}";
  gkm_graph* g = NULL;
  EXPECT(gkm_graph_from_json(text, &g) == GKM_OK);
  if (!g) return;
  EXPECT(gkm_graph_num_vertices(g) == 2);
  int d = -1;
  EXPECT(gkm_graph_dim_h(g, 1, &d) == GKM_OK);
  EXPECT(d == 2);
  gkm_graph_free(g);

  g = NULL;
  EXPECT(gkm_graph_from_json("{\"dim\":1}", &g) == GKM_INPUT_ERROR);
  EXPECT(g == NULL);
}

int main(void) {
  EXPECT(strlen(gkm_version()) > 0);
  gkm_graph* g = NULL;
  EXPECT(gkm_graph_open("sn:x", &g) == GKM_INPUT_ERROR);
  EXPECT(g == NULL);
  EXPECT(strstr(gkm_last_error(), "sn:x") != NULL);

  permutahedron();
  from_json();

  char* out = NULL;
  EXPECT(gkm_appendix_check(3, 1, GKM_FORMAT_JSON, &out) == GKM_OK);
  EXPECT(out != NULL);
  gkm_string_free(out);
  gkm_string_free(NULL);
  gkm_graph_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi ok\n");
  return 0;
}
