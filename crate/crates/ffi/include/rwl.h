#ifndef RWL_H
#define RWL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum RwlStatus {
  RWL_STATUS_OK = 0,
  RWL_STATUS_NULL_POINTER = 1,
  RWL_STATUS_INVALID_UTF8 = 2,
  RWL_STATUS_PARSE_ERROR = 3,
  RWL_STATUS_INVALID_ARGUMENT = 4,
  RWL_STATUS_TOO_LARGE = 5,
  /**
   * The check ran and did not pass; its report is still returned.
   */
  RWL_STATUS_VERIFICATION_FAILED = 6,
  RWL_STATUS_INTERNAL = 7,
} RwlStatus;

/**
 * Opaque graph handle.
 */
typedef struct RwlGraph RwlGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an edge list ("n m" header, then m lines "u v", `#` comments).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RwlStatus rwl_graph_parse(const char *text, struct RwlGraph **out);

/**
 * Builds a family member. `kind` is one of `complete`, `path`, `cycle`,
 * `king`, `grid`; `m` is the row count of boards and must be 0 otherwise.
 *
 * # Safety
 * `kind` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RwlStatus rwl_graph_family(const char *kind, size_t m, size_t n, struct RwlGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void rwl_graph_free(struct RwlGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t rwl_graph_order(const struct RwlGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t rwl_graph_edge_count(const struct RwlGraph *g);

/**
 * # Safety
 * `g` must be null or a live handle.
 */
bool rwl_graph_is_connected(const struct RwlGraph *g);

/**
 * Number of random walk labelings by subset DP, as a decimal string.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum RwlStatus rwl_count_dp(const struct RwlGraph *g, char **out);

/**
 * Labelings whose first label goes to vertex `v`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum RwlStatus rwl_count_started_at(const struct RwlGraph *g, size_t v, char **out);

/**
 * Number of labelings found by simulating the walk; order at most 10.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum RwlStatus rwl_count_walk(const struct RwlGraph *g, char **out);

/**
 * Evaluates a named closed form at `n`. The result is an integer or a
 * reduced fraction `p/q`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RwlStatus rwl_formula(const char *name, size_t n, char **out);

/**
 * Runs a named check up to `n_max` and writes its JSON result to `out`.
 *
 * `n_max` is the term count for the series checks, and for the growth-rate
 * check the points are `n_max/16, n_max/8, n_max/4, n_max/2, n_max`.
 * Returns `VerificationFailed` (with the report written) when the check
 * does not pass.
 *
 * # Safety
 * `claim` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RwlStatus rwl_verify(const char *claim, size_t n_max, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void rwl_string_free(char *s);

/**
 * Message for the last failed call on this thread, or an empty string.
 * Valid until the next call into this library on the same thread.
 */
const char *rwl_last_error_message(void);

/**
 * Static name of a status code, e.g. `"RWL_STATUS_TOO_LARGE"`.
 */
const char *rwl_status_name(enum RwlStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RWL_H */
