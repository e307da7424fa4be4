#ifndef KEMPE_RECONFIG_H
#define KEMPE_RECONFIG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KcStatus {
  KC_STATUS_OK = 0,
  KC_STATUS_NULL_POINTER = 1,
  KC_STATUS_INVALID_INPUT = 2,
  KC_STATUS_PRECONDITION = 3,
  KC_STATUS_RESOURCE_LIMIT = 4,
  KC_STATUS_INTERNAL = 5,
} KcStatus;

/**
 * Opaque graph handle.
 */
typedef struct KcGraph KcGraph;

/**
 * Opaque, incrementally filled list assignment.
 */
typedef struct KcLists KcLists;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph6 string.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum KcStatus kc_graph_from_graph6(const char *text, struct KcGraph **out);

/**
 * Builds a graph from `edge_count` pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values (may be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum KcStatus kc_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct KcGraph **out);

/**
 * # Safety
 * `g` must come from this library (or be null) and not be used afterwards.
 */
void kc_graph_free(struct KcGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t kc_graph_vertex_count(const struct KcGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KcStatus kc_graph_connectivity(const struct KcGraph *g, size_t *out);

/**
 * An assignment of `n` empty lists; fill each with [`kc_lists_set`].
 *
 * # Safety
 * `out` must be writable.
 */
enum KcStatus kc_lists_new(size_t n, struct KcLists **out);

/**
 * Replaces the list of vertex `v` with `len` colors.
 *
 * # Safety
 * `lists` must be a live handle; `colors` must point to `len` values.
 */
enum KcStatus kc_lists_set(struct KcLists *lists, size_t v, const uint32_t *colors, size_t len);

/**
 * # Safety
 * `lists` must come from this library (or be null) and not be used afterwards.
 */
void kc_lists_free(struct KcLists *lists);

/**
 * Whether some L-coloring exists.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum KcStatus kc_is_l_colorable(const struct KcGraph *g, const struct KcLists *lists, bool *out);

/**
 * Number of Kempe classes of L-colorings, enumerating at most `node_cap`
 * colorings.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum KcStatus kc_class_count(const struct KcGraph *g,
                             const struct KcLists *lists,
                             size_t node_cap,
                             size_t *out);

/**
 * Sweeps tight assignments of a 4-connected graph and writes the report
 * JSON (without timing) to `*out_json`; free it with [`kc_string_free`].
 * `samples == 0` enumerates canonical assignments, otherwise samples that
 * many with `seed`.
 *
 * # Safety
 * `g` must be a live handle; `out_json` must be writable.
 */
enum KcStatus kc_verify_theorem2_json(const struct KcGraph *g,
                                      size_t palette_cap,
                                      size_t samples,
                                      uint64_t seed,
                                      char **out_json);

/**
 * # Safety
 * `s` must come from this library (or be null) and not be used afterwards.
 */
void kc_string_free(char *s);

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into this library on the same thread.
 */
const char *kc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KEMPE_RECONFIG_H */
