#ifndef STRONGEDGE_H
#define STRONGEDGE_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum se_status_t {
  SE_OK = 0,
  SE_NULL_POINTER = 1,
  SE_INVALID_UTF8 = 2,
  SE_PARSE_ERROR = 3,
  SE_INVALID_ARGUMENT = 4,
  /**
   * The quantity is undefined for this graph (for example, an edgeless graph).
   */
  SE_UNDEFINED = 5,
  SE_TOO_LARGE = 6,
  SE_TIMEOUT = 7,
  SE_BUFFER_TOO_SMALL = 8,
  SE_INTERNAL = 9,
  SE_PANIC = 10,
} se_status_t;

/**
 * Vertex classes, shared by both schemes.
 */
typedef enum se_class_t {
  SE_CLASS_UNCLASSIFIED = 0,
  SE_CLASS_DEG2 = 1,
  SE_CLASS_DEG3A = 2,
  SE_CLASS_DEG3B = 3,
  SE_CLASS_DEG3B_STRONG = 4,
  SE_CLASS_DEG3B_WEAK = 5,
  SE_CLASS_DEG3C = 6,
  SE_CLASS_DEG3C_WEAK = 7,
  SE_CLASS_DEG3C_MODERATE = 8,
  SE_CLASS_DEG3C_STRONG = 9,
  SE_CLASS_DEG3D = 10,
  SE_CLASS_DEG4 = 11,
  SE_CLASS_DEG4A = 12,
  SE_CLASS_DEG4B = 13,
  SE_CLASS_DEG4C_STRONG = 14,
  SE_CLASS_DEG4C_WEAK = 15,
  SE_CLASS_DEG4D = 16,
  SE_CLASS_DEG5 = 17,
} se_class_t;

/**
 * Opaque graph handle.
 */
typedef struct se_graph_t se_graph_t;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *se_version(void);

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into the library on this thread.
 */
const char *se_last_error_message(void);

/**
 * Parses one graph6 line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out_graph` a valid pointer.
 */
enum se_status_t se_graph_from_graph6(const char *text, struct se_graph_t **out_graph);

/**
 * Parses an edge list document (`u v` per line, optional `n=` header, `#` comments).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out_graph` a valid pointer.
 */
enum se_status_t se_graph_from_edge_list(const char *text, struct se_graph_t **out_graph);

/**
 * Builds a graph on `n` vertices from `m` pairs stored flat in `pairs` (`2 * m` entries).
 *
 * # Safety
 * `pairs` must point to `2 * m` readable values (it may be null when `m` is 0).
 */
enum se_status_t se_graph_from_edges(size_t n,
                                     const size_t *pairs,
                                     size_t m,
                                     struct se_graph_t **out_graph);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void se_graph_free(struct se_graph_t *g);

/**
 * Vertex and edge counts.
 *
 * # Safety
 * `g` must be a live handle; `n` and `m` valid pointers.
 */
enum se_status_t se_graph_counts(const struct se_graph_t *g, size_t *n, size_t *m);

/**
 * Ore-degree, the largest `d(u) + d(v)` over edges. `SE_UNDEFINED` for edgeless graphs.
 *
 * # Safety
 * `g` must be a live handle; `theta` a valid pointer.
 */
enum se_status_t se_ore_degree(const struct se_graph_t *g, size_t *theta);

/**
 * Exact maximum average degree as a reduced fraction.
 *
 * # Safety
 * `g` must be a live handle; `num` and `den` valid pointers.
 */
enum se_status_t se_mad(const struct se_graph_t *g, int64_t *num, int64_t *den);

/**
 * Strong chromatic index. `budget_secs <= 0` means no time limit. When `colors`
 * is non-null it receives one color in `1..=chi` per edge and must hold `colors_len >= m`.
 *
 * # Safety
 * `g` must be a live handle, `chi` a valid pointer, `colors` null or writable for `colors_len` values.
 */
enum se_status_t se_chi_s(const struct se_graph_t *g,
                          double budget_secs,
                          size_t *chi,
                          uint32_t *colors,
                          size_t colors_len);

/**
 * Vertex classes under scheme 7 or 8, written to `labels` (`len >= n`).
 *
 * # Safety
 * `g` must be a live handle and `labels` writable for `len` values.
 */
enum se_status_t se_classify(const struct se_graph_t *g,
                             int theta,
                             enum se_class_t *labels,
                             size_t len);

/**
 * All metrics as a JSON object. Free the result with `se_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `json` a valid pointer.
 */
enum se_status_t se_metrics_json(const struct se_graph_t *g, char **json);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void se_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRONGEDGE_H */
