#ifndef TRUNGCD_H
#define TRUNGCD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define TRUNGCD_CHECK_WELL_COVERED 1

#define TRUNGCD_CHECK_W2 (1 << 1)

#define TRUNGCD_CHECK_EULERIAN (1 << 2)

#define TRUNGCD_CHECK_CM (1 << 3)

#define TRUNGCD_CHECK_GORENSTEIN (1 << 4)

#define TRUNGCD_CHECK_CHARNEY_DAVIS (1 << 5)

#define TRUNGCD_CHECK_ALL ((1 << 6) - 1)

#define TRUNGCD_VERDICT_FALSE 0

#define TRUNGCD_VERDICT_TRUE 1

#define TRUNGCD_VERDICT_NOT_APPLICABLE -1

/**
 * Status codes. Values 1-3 match the CLI exit codes.
 */
typedef enum TrungcdStatus {
  TRUNGCD_STATUS_OK = 0,
  TRUNGCD_STATUS_PARSE_ERROR = 1,
  TRUNGCD_STATUS_DOMAIN_ERROR = 2,
  TRUNGCD_STATUS_RESOURCE_ERROR = 3,
  TRUNGCD_STATUS_NULL_POINTER = 4,
  TRUNGCD_STATUS_INVALID_UTF8 = 5,
} TrungcdStatus;

/**
 * Opaque handle to the intermediate graphs of a generated family.
 */
typedef struct TrungcdFamily TrungcdFamily;

/**
 * Opaque graph handle.
 */
typedef struct TrungcdGraph TrungcdGraph;

/**
 * Indices of the vertices added by the construction, plus the chosen vertex.
 */
typedef struct TrungcdLabels {
  size_t a;
  size_t b;
  size_t c;
  size_t v;
} TrungcdLabels;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *trungcd_version(void);

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *trungcd_last_error(void);

/**
 * Parses the edge-list text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TrungcdStatus trungcd_graph_from_edge_list(const char *text, struct TrungcdGraph **out);

/**
 * Parses one short-form graph6 record.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TrungcdStatus trungcd_graph_from_graph6(const char *text, struct TrungcdGraph **out);

/**
 * Builds a graph from `edge_count` pairs stored flat in `edges`
 * (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (it may be null
 * when `edge_count` is 0); `out` must be writable.
 */
enum TrungcdStatus trungcd_graph_from_edges(size_t n,
                                            const uint32_t *edges,
                                            size_t edge_count,
                                            struct TrungcdGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `graph` must come from this library and not be used afterwards.
 */
void trungcd_graph_free(struct TrungcdGraph *graph);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t trungcd_graph_vertex_count(const struct TrungcdGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t trungcd_graph_edge_count(const struct TrungcdGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t trungcd_independence_number(const struct TrungcdGraph *graph);

/**
 * Canonical edge-list text.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum TrungcdStatus trungcd_graph_to_edge_list(const struct TrungcdGraph *graph, char **out);

/**
 * graph6 record without a trailing newline.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum TrungcdStatus trungcd_graph_to_graph6(const struct TrungcdGraph *graph, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void trungcd_string_free(char *s);

/**
 * Builds `Tr(H, v)`. `labels` may be null.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable; `labels` must be
 * null or writable.
 */
enum TrungcdStatus trungcd_trung(const struct TrungcdGraph *graph,
                                 size_t v,
                                 struct TrungcdGraph **out,
                                 struct TrungcdLabels *labels);

/**
 * Generates the girth-4 family from `C5`. `random == false` picks the
 * smallest degree-2 vertex each step and ignores `seed`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TrungcdStatus trungcd_family_generate(size_t steps,
                                           bool random,
                                           uint64_t seed,
                                           struct TrungcdFamily **out);

/**
 * # Safety
 * `family` must be null or a live handle.
 */
size_t trungcd_family_len(const struct TrungcdFamily *family);

/**
 * Copies member `index` into a new graph handle. `labels` may be null.
 *
 * # Safety
 * `family` must be a live handle; `out` must be writable; `labels` must be
 * null or writable.
 */
enum TrungcdStatus trungcd_family_member(const struct TrungcdFamily *family,
                                         size_t index,
                                         struct TrungcdGraph **out,
                                         struct TrungcdLabels *labels);

/**
 * # Safety
 * `family` must come from this library and not be used afterwards.
 */
void trungcd_family_free(struct TrungcdFamily *family);

/**
 * Independence polynomial as a JSON array of decimal strings.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum TrungcdStatus trungcd_ind_poly_json(const struct TrungcdGraph *graph, char **out);

/**
 * `I(G, num/den)` as `"num/den"` in lowest terms.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum TrungcdStatus trungcd_ind_poly_eval(const struct TrungcdGraph *graph,
                                         int64_t num,
                                         int64_t den,
                                         char **out);

/**
 * Runs the checks selected by `flags` (`TRUNGCD_CHECK_*`) and writes the
 * JSON report. `force` lifts the W2 vertex cap.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum TrungcdStatus trungcd_check_json(const struct TrungcdGraph *graph,
                                      uint32_t flags,
                                      bool force,
                                      char **out);

/**
 * Gorenstein over Q as a `TRUNGCD_VERDICT_*` value.
 *
 * # Safety
 * `graph` must be a live handle; `verdict` must be writable.
 */
enum TrungcdStatus trungcd_is_gorenstein(const struct TrungcdGraph *graph, int32_t *verdict);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRUNGCD_H */
