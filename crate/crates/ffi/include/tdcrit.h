#ifndef TDCRIT_H
#define TDCRIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum TdcStatus {
  TDC_STATUS_OK = 0,
  TDC_STATUS_NULL_POINTER = 1,
  TDC_STATUS_INVALID_ARGUMENT = 2,
  TDC_STATUS_PARSE = 3,
  /**
   * The graph has no total dominating set (empty or an isolated vertex).
   */
  TDC_STATUS_INFEASIBLE = 4,
  TDC_STATUS_PANIC = 5,
} TdcStatus;

typedef enum TdcExistence {
  TDC_EXISTENCE_EXISTS = 0,
  TDC_EXISTENCE_NOT_EXISTS = 1,
  TDC_EXISTENCE_OPEN = 2,
} TdcExistence;

/**
 * Opaque graph handle.
 */
typedef struct TdcGraph TdcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * A graph with `n` vertices and no edges.
 */
struct TdcGraph *tdc_graph_new(size_t n);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void tdc_graph_free(struct TdcGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
enum TdcStatus tdc_graph_add_edge(struct TdcGraph *g, size_t i, size_t j);

/**
 * # Safety
 * `g` must be null or a live handle.
 */
size_t tdc_graph_order(const struct TdcGraph *g);

/**
 * Parses one graph in graph6 or edge-list form.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum TdcStatus tdc_graph_parse(const char *text, struct TdcGraph **out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer. The string must be
 * released with `tdc_string_free`.
 */
enum TdcStatus tdc_graph_to_graph6(const struct TdcGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void tdc_string_free(char *s);

/**
 * Total domination number of `g`.
 *
 * When `witness` is non-null it receives a minimum total dominating set
 * (ascending ids) if `witness_cap` is large enough; `witness_len` (if
 * non-null) always receives the set's size. A too-small buffer yields
 * `InvalidArgument` with `value` and `witness_len` still filled in.
 *
 * # Safety
 * `g` must be a live handle, `value` a valid pointer, and `witness` point
 * to at least `witness_cap` writable elements when non-null.
 */
enum TdcStatus tdc_gamma_t(const struct TdcGraph *g,
                           size_t *value,
                           size_t *witness,
                           size_t witness_cap,
                           size_t *witness_len);

/**
 * Criticality verdict. `gamma_t` may be null.
 *
 * # Safety
 * `g` must be a live handle and `critical` a valid pointer.
 */
enum TdcStatus tdc_is_critical(const struct TdcGraph *g, bool *critical, size_t *gamma_t);

/**
 * Builds a family member; `family` is a name such as `"four-odd"`.
 *
 * # Safety
 * `family` must be a nul-terminated string and `out` a valid pointer.
 */
enum TdcStatus tdc_construct(const char *family, size_t m, size_t delta, struct TdcGraph **out);

/**
 * Existence of an m-γt-critical graph of order Δ + m with δ ≥ 2.
 * `verdict` (if non-null) receives a description such as
 * `"Exists four-odd mainthm4"`, to be released with `tdc_string_free`.
 *
 * # Safety
 * `status` must be a valid pointer; `verdict` null or valid.
 */
enum TdcStatus tdc_existence(size_t m, size_t delta, enum TdcExistence *status, char **verdict);

/**
 * Vertex amalgamation of `g1` at `v1` with `g2` at `v2`; the merged vertex
 * is 0.
 *
 * # Safety
 * `g1`, `g2` must be live handles and `out` a valid pointer.
 */
enum TdcStatus tdc_amalgamate(const struct TdcGraph *g1,
                              size_t v1,
                              const struct TdcGraph *g2,
                              size_t v2,
                              struct TdcGraph **out);

/**
 * Message for the last failure on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *tdc_last_error_message(void);

/**
 * Library version, a static string.
 */
const char *tdc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TDCRIT_H */
