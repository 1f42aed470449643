#ifndef LAPCOEF_H
#define LAPCOEF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum LcStatus {
  LC_STATUS_OK = 0,
  LC_STATUS_NULL_POINTER = 1,
  LC_STATUS_INVALID_UTF8 = 2,
  LC_STATUS_INVALID_JSON = 3,
  LC_STATUS_INVALID_ARGUMENT = 4,
  LC_STATUS_TOO_LARGE = 5,
  /**
   * A numerical routine failed (e.g. quadrature did not converge).
   */
  LC_STATUS_NUMERICAL = 6,
  /**
   * A verification found violations; the report is still returned.
   */
  LC_STATUS_VIOLATION = 7,
  LC_STATUS_PANIC = 8,
} LcStatus;

/**
 * Opaque tree handle.
 */
typedef struct LcTree LcTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. Free with
 * `lc_string_free`.
 */
char *lc_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void lc_string_free(char *s);

/**
 * # Safety
 * `t` must be NULL or a handle returned by this library, not yet freed.
 */
void lc_tree_free(struct LcTree *t);

/**
 * Parse `{"n": .., "edges": [[a, b], ..]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LcStatus lc_tree_from_json(const char *json, struct LcTree **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_tree_path(size_t n, struct LcTree **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_tree_star(size_t n, struct LcTree **out);

/**
 * Greedy tree of order `n` and maximum degree `dplus1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_tree_greedy(size_t n, size_t dplus1, struct LcTree **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_tree_broom(size_t n, size_t dplus1, struct LcTree **out);

/**
 * Complete `d`-ary tree of height `h`, root 0.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_tree_complete_dary(size_t d, size_t h, struct LcTree **out);

/**
 * Number of vertices, or 0 for a NULL handle.
 *
 * # Safety
 * `t` must be NULL or a live handle.
 */
size_t lc_tree_order(const struct LcTree *t);

/**
 * Tree JSON.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_tree_to_json(const struct LcTree *t, char **out);

/**
 * Canonical code of the free tree, as hex.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_tree_canonical_code(const struct LcTree *t, char **out);

/**
 * Laplacian coefficients `[c_0, .., c_n]` as a JSON array of decimal strings.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_tree_coefficients_json(const struct LcTree *t, char **out);

/**
 * Matching polynomial of the subdivision, coefficients from degree 0, as a
 * JSON array of decimal strings.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_tree_subdivision_matching_json(const struct LcTree *t, char **out);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_tree_incidence_energy(const struct LcTree *t, double *out);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_tree_lel(const struct LcTree *t, double *out);

/**
 * Energy of the subdivision from the Coulson integral.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum LcStatus lc_tree_coulson_energy(const struct LcTree *t, double *out);

/**
 * `tau(S(T), x)` with `T` rooted at `root`; `x` and the result are "p/q"
 * strings.
 *
 * # Safety
 * `t` must be a live handle, `x` a NUL-terminated string, `out` writable.
 */
enum LcStatus lc_tree_tau(const struct LcTree *t, size_t root, const char *x, char **out);

/**
 * Run a verification with command-line style arguments, e.g.
 * `"thm37 --n 4..9 --dplus1 3"`, and return the report text.
 *
 * Returns `LC_STATUS_VIOLATION` (with the report) when violations are found.
 *
 * # Safety
 * `args` must be a NUL-terminated string; `out` must be writable.
 */
enum LcStatus lc_verify(const char *args, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LAPCOEF_H */
