#ifndef GKMLAB_H
#define GKMLAB_H

#include <stdint.h>

#if defined(GKMLAB_BUILDING)
#define GKM_API __attribute__((visibility("default")))
#else
#define GKM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gkm_graph gkm_graph;

typedef enum gkm_status {
  GKM_OK = 0,
  GKM_NEGATIVE = 1,        /* the report ran, its verdict is negative */
  GKM_INPUT_ERROR = 2,     /* malformed graph, spec, options or class */
  GKM_PRECONDITION = 3,    /* e.g. non-polarizing xi, critical level */
  GKM_INCONSISTENT = 4,    /* an identity that must hold failed */
  GKM_INTERNAL = 5
} gkm_status;

typedef enum gkm_format { GKM_FORMAT_JSON = 0, GKM_FORMAT_TABLE = 1 } gkm_format;

GKM_API const char* gkm_version(void);

/* Message of the last failure on the calling thread ("" if none). */
GKM_API const char* gkm_last_error(void);

/* "sn:N", "johnson:N,K" or "file:PATH". */
GKM_API gkm_status gkm_graph_open(const char* spec, gkm_graph** out);
/* The graph JSON schema as text. */
GKM_API gkm_status gkm_graph_from_json(const char* text, gkm_graph** out);
GKM_API void gkm_graph_free(gkm_graph* g);

GKM_API int gkm_graph_num_vertices(const gkm_graph* g);
GKM_API int gkm_graph_dim(const gkm_graph* g);
/* -1 when irregular. */
GKM_API int gkm_graph_valence(const gkm_graph* g);

/* "a,b,..." with rational entries. Without it xi is searched. */
GKM_API gkm_status gkm_graph_set_xi(gkm_graph* g, const char* csv);
GKM_API gkm_status gkm_graph_set_seed(gkm_graph* g, uint64_t seed);

/* Writes b_0..b_d into out (at most cap entries); *len receives d + 1. */
GKM_API gkm_status gkm_graph_betti(gkm_graph* g, int* out, int cap, int* len);
GKM_API gkm_status gkm_graph_dim_h(gkm_graph* g, int m, int* out);

/* command: validate, morse, betti, cohdim, thom, package, slices, integrate,
   cross-section, cut, sweep. options_json may be NULL; fields: max_degree,
   degree, level, a, class. *out is set whenever the report ran (GKM_OK or
   GKM_NEGATIVE) and must be released with gkm_string_free. */
GKM_API gkm_status gkm_run(gkm_graph* g, const char* command, const char* options_json, gkm_format format,
                           char** out);

GKM_API gkm_status gkm_appendix_check(int max_m, uint64_t seed, gkm_format format, char** out);

GKM_API void gkm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
