/*
 * drgmd: resolving sets and metric dimension of Johnson, doubled Odd, doubled
 * Grassmann and twisted Grassmann graphs.
 *
 * Plain C interface over opaque handles. Every fallible call returns a
 * drg_status; on failure drg_last_error() holds a message for the calling
 * thread. Strings returned through char** are owned by the caller and must be
 * released with drg_string_free.
 */
#ifndef DRGMD_H
#define DRGMD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DRGMD_BUILDING)
#    define DRGMD_API __declspec(dllexport)
#  else
#    define DRGMD_API __declspec(dllimport)
#  endif
#else
#  define DRGMD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum drg_status {
  DRG_OK = 0,
  DRG_E_BAD_PARAMS = 2,
  DRG_E_TOO_LARGE = 3,
  DRG_E_MALFORMED = 4,
  DRG_E_NOT_PRIME = 5,
  DRG_E_TOO_MANY = 6,
  DRG_E_ZERO_INVERSE = 7,
  DRG_E_AMBIENT_MISMATCH = 8,
  DRG_E_VERTEX_NOT_IN_GRAPH = 9,
  DRG_E_TOO_LARGE_FOR_FORMAT = 10,
  DRG_E_INCONCLUSIVE = 11,
  DRG_E_INTERNAL = 99
} drg_status;

typedef enum drg_family {
  DRG_JOHNSON = 0,
  DRG_DOUBLED_ODD = 1,
  DRG_DOUBLED_GRASSMANN = 2,
  DRG_TWISTED_GRASSMANN = 3
} drg_family;

typedef enum drg_export_format { DRG_EXPORT_EDGE_LIST = 0, DRG_EXPORT_GRAPH6 = 1, DRG_EXPORT_JSON = 2 } drg_export_format;

typedef enum drg_table_format { DRG_TABLE_JSON = 0, DRG_TABLE_CSV = 1, DRG_TABLE_TEXT = 2 } drg_table_format;

typedef enum drg_log_base { DRG_LOG_E = 0, DRG_LOG_2 = 1 } drg_log_base;

typedef enum drg_partition_kind {
  DRG_PARTITION_SPREAD = 0,    /* spread of F_q^{2e} */
  DRG_PARTITION_E1_E = 1,      /* {e+1, e}-partition of F_q^{2e+1} */
  DRG_PARTITION_E_1 = 2        /* {e, 1}-partition of F_q^{2e+1} */
} drg_partition_kind;

/* n: ground-set size / ambient dimension (0 lets the library derive 2e+1
 * where it is implied); q: field order, 0 for the set families. */
typedef struct drg_params {
  int n;
  int e;
  int q;
} drg_params;

typedef struct drg_graph drg_graph;
typedef struct drg_landmarks drg_landmarks;
typedef struct drg_report drg_report;

DRGMD_API const char* drg_status_name(drg_status status);
DRGMD_API const char* drg_last_error(void);
DRGMD_API void drg_string_free(char* s);

DRGMD_API drg_status drg_family_from_name(const char* name, drg_family* out);
DRGMD_API const char* drg_family_name(drg_family family);

/* Vertex cap used when a call is given max_vertices == 0: the DRG_MAX_VERTICES
 * environment variable if set, otherwise 100000. */
DRGMD_API uint64_t drg_default_vertex_cap(void);

/* --- graphs ------------------------------------------------------------- */

DRGMD_API drg_status drg_graph_build(drg_family family, drg_params params, uint64_t max_vertices,
                                     drg_graph** out);
DRGMD_API drg_status drg_graph_from_json(const char* text, uint64_t max_vertices, drg_graph** out);
DRGMD_API void drg_graph_free(drg_graph* g);

DRGMD_API drg_family drg_graph_family(const drg_graph* g);
DRGMD_API drg_params drg_graph_params(const drg_graph* g);
DRGMD_API uint64_t drg_graph_vertex_count(const drg_graph* g);
DRGMD_API int drg_graph_diameter(const drg_graph* g);
DRGMD_API drg_status drg_graph_distance(const drg_graph* g, uint64_t u, uint64_t v, int* out);
/* JSON descriptor of one vertex. */
DRGMD_API drg_status drg_graph_vertex_json(const drg_graph* g, uint64_t v, char** out);
/* BFS distances from `source` over the unit-distance graph (length = vertex
 * count, -1 for unreachable). */
DRGMD_API drg_status drg_graph_bfs(const drg_graph* g, uint64_t source, int* out_distances);
DRGMD_API drg_status drg_graph_export(const drg_graph* g, drg_export_format format, unsigned threads,
                                      char** out);

/* --- landmark sets ------------------------------------------------------ */

/* The family's resolving-set construction placed on g. u_index selects the
 * auxiliary subspace U for the Grassmann families (0 = canonical choice). */
DRGMD_API drg_status drg_landmarks_construct(const drg_graph* g, uint32_t u_index, drg_landmarks** out);
DRGMD_API drg_status drg_landmarks_from_indices(const drg_graph* g, const uint64_t* indices, size_t count,
                                                drg_landmarks** out);
DRGMD_API drg_status drg_landmarks_from_json(const drg_graph* g, const char* text, drg_landmarks** out);
DRGMD_API void drg_landmarks_free(drg_landmarks* s);

DRGMD_API size_t drg_landmarks_size(const drg_landmarks* s);
DRGMD_API uint64_t drg_landmarks_index(const drg_landmarks* s, size_t i);
/* Count before deduplication as a decimal string. */
DRGMD_API drg_status drg_landmarks_multiset_count(const drg_landmarks* s, char** out);
DRGMD_API drg_status drg_landmarks_to_json(const drg_graph* g, const drg_landmarks* s, char** out);

/* --- verification and search -------------------------------------------- */

DRGMD_API drg_status drg_verify(const drg_graph* g, const drg_landmarks* s, unsigned threads, drg_report** out);
DRGMD_API void drg_report_free(drg_report* r);
DRGMD_API int drg_report_is_resolving(const drg_report* r);
/* Returns 1 and fills u, v when the report carries a collision witness. */
DRGMD_API int drg_report_witness(const drg_report* r, uint64_t* u, uint64_t* v);
DRGMD_API drg_status drg_report_to_json(const drg_report* r, char** out);

/* Exact metric dimension. max_k <= 0 searches up to |V|-1; budget == 0 uses
 * the default node budget; max_vertices == 0 uses 512. Returns
 * DRG_E_INCONCLUSIVE when the search stops short (mu and witness untouched). */
DRGMD_API drg_status drg_exact(const drg_graph* g, int max_k, uint64_t budget, uint64_t max_vertices, int* mu,
                               drg_landmarks** witness);

/* --- bounds and partitions ---------------------------------------------- */

DRGMD_API drg_status drg_bounds(drg_family family, drg_params params, drg_log_base base, drg_table_format format,
                                char** out);

/* e is m for DRG_PARTITION_SPREAD. Output is the partition JSON document. */
DRGMD_API drg_status drg_partition_emit(drg_partition_kind kind, int q, int e, char** out);
/* Verifies a partition JSON document; *passed is 1 or 0, *report_json the
 * verdict with witnesses. */
DRGMD_API drg_status drg_partition_verify(const char* text, int* passed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* DRGMD_H */
