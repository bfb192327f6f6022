#ifndef LSCRYSTAL_H
#define LSCRYSTAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LscConnectedness {
  LSC_CONNECTEDNESS_CONNECTED = 0,
  LSC_CONNECTEDNESS_INFINITELY_MANY_COMPONENTS = 1,
  LSC_CONNECTEDNESS_NOT_STAR = 2,
} LscConnectedness;

typedef enum LscOp {
  LSC_OP_E = 0,
  LSC_OP_F = 1,
} LscOp;

/**
 * Status codes; the nonzero values match the CLI exit codes.
 */
typedef enum LscStatus {
  LSC_STATUS_OK = 0,
  LSC_STATUS_VIOLATION = 1,
  LSC_STATUS_BAD_CARTAN = 2,
  LSC_STATUS_BAD_WEIGHT = 3,
  LSC_STATUS_BAD_PATH = 4,
  LSC_STATUS_BAD_CONFIG = 5,
  LSC_STATUS_NULL_ARGUMENT = 6,
  LSC_STATUS_PANIC = 7,
} LscStatus;

/**
 * Opaque LS path handle.
 */
typedef struct LscPath LscPath;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Valid until the
 * next `lsc_*` call on the same thread.
 */
const char *lsc_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lsc_version(void);

/**
 * Release a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from an `lsc_*` out-parameter and not be freed twice.
 */
void lsc_string_free(char *s);

/**
 * Release a path handle. NULL is ignored.
 *
 * # Safety
 * `p` must come from this library and not be freed twice.
 */
void lsc_path_free(struct LscPath *p);

/**
 * Classification of the orbit of `kΛ1 + lΛ2` as a JSON object.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LscStatus lsc_classify(int64_t a, int64_t b, int64_t k, int64_t l, char **out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum LscStatus lsc_decide_connectedness(int64_t a,
                                        int64_t b,
                                        int64_t k,
                                        int64_t l,
                                        enum LscConnectedness *out);

/**
 * The straight path `π_λ` for `λ = kΛ1 + lΛ2`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LscStatus lsc_path_pi_lambda(int64_t a, int64_t b, int64_t k, int64_t l, struct LscPath **out);

/**
 * Parse and validate a path JSON record.
 *
 * # Safety
 * `json` must be NUL-terminated and `out` valid.
 */
enum LscStatus lsc_path_from_json(const char *json, struct LscPath **out);

/**
 * # Safety
 * `path` must be a live handle and `out` valid.
 */
enum LscStatus lsc_path_to_json(const struct LscPath *path, char **out);

/**
 * Apply `e_i` or `f_i`. When the operator gives `0`, `*out` is NULL and the
 * status is `Ok`.
 *
 * # Safety
 * `path` must be a live handle and `out` valid.
 */
enum LscStatus lsc_path_apply(const struct LscPath *path,
                              enum LscOp op,
                              uint8_t i,
                              struct LscPath **out);

/**
 * Number of segments.
 *
 * # Safety
 * `path` must be a live handle and `out` valid.
 */
enum LscStatus lsc_path_len(const struct LscPath *path, size_t *out);

/**
 * `ε_i` and `φ_i` of a path.
 *
 * # Safety
 * `path` must be a live handle; `eps` and `phi` valid.
 */
enum LscStatus lsc_path_eps_phi(const struct LscPath *path, uint8_t i, int64_t *eps, int64_t *phi);

/**
 * `wt(π)` as coordinates in the fundamental weights.
 *
 * # Safety
 * `path` must be a live handle; `c1` and `c2` valid.
 */
enum LscStatus lsc_path_weight(const struct LscPath *path, int64_t *c1, int64_t *c2);

/**
 * Explore the component of `seed` and return the report as JSON.
 *
 * `checks` is a comma-separated list of check names, or NULL for the
 * defaults of the seed. `threads = 0` uses the global pool. Returns
 * `Violation` with the report filled in when a check fails.
 *
 * # Safety
 * `seed` must be a live handle, `checks` NULL or NUL-terminated, `out` valid.
 */
enum LscStatus lsc_explore(const struct LscPath *seed,
                           size_t max_depth,
                           size_t max_nodes,
                           const char *checks,
                           size_t threads,
                           char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LSCRYSTAL_H */
