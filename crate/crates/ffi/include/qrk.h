#ifndef QRK_H
#define QRK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success; all other values are errors.
 */
typedef enum QrkStatus {
  QRK_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  QRK_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  QRK_STATUS_INVALID_UTF8 = 2,
  /**
   * Bad argument: non-prime modulus, non-coprime pair, out-of-range value.
   */
  QRK_STATUS_INVALID_ARGUMENT = 3,
  QRK_STATUS_UNKNOWN_IDENTITY = 4,
  /**
   * The expression did not parse.
   */
  QRK_STATUS_PARSE_ERROR = 5,
  /**
   * Arithmetic or convergence failure during evaluation.
   */
  QRK_STATUS_EVAL_ERROR = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  QRK_STATUS_INTERNAL = 7,
} QrkStatus;

/**
 * Opaque Laurent polynomial with rational coefficients.
 */
typedef struct QrkPoly QrkPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next `qrk_*` call on the same thread.
 */
const char *qrk_last_error_message(void);

/**
 * `chi_p(y) = (prod_{k=1}^{p-1} (y^k - 1) - p) / (1 + y + ... + y^{p-1})`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum QrkStatus qrk_chi_poly(uint64_t p, struct QrkPoly **out);

/**
 * Highest exponent, or 0 for the zero polynomial.
 *
 * # Safety
 * `poly` comes from this library and `out` is valid for a write.
 */
enum QrkStatus qrk_poly_degree(const struct QrkPoly *poly, int64_t *out);

/**
 * Renders the polynomial in ascending order, e.g. `-2 + y`.
 *
 * # Safety
 * `poly` comes from this library and `out` is valid for a pointer write.
 */
enum QrkStatus qrk_poly_render(const struct QrkPoly *poly, char **out);

/**
 * # Safety
 * `poly` is null or came from this library and was not freed before.
 */
void qrk_poly_free(struct QrkPoly *poly);

/**
 * # Safety
 * `s` is null or was returned by this library and not freed before.
 */
void qrk_string_free(char *s);

/**
 * `p(n)` as a decimal string.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum QrkStatus qrk_partition_count(uint64_t n, char **out);

/**
 * Verdict JSON for one registry id. `order` and `q_order` override the
 * defaults when positive. A failed identity is still `QRK_STATUS_OK`; read
 * `status` from the JSON.
 *
 * # Safety
 * `id` is a NUL-terminated string; `out` is valid for a pointer write.
 */
enum QrkStatus qrk_verify(const char *id, int64_t order, int64_t q_order, char **out);

/**
 * JSON array of verdicts for the whole registry, in registry order.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum QrkStatus qrk_verify_all_json(char **out);

/**
 * Evaluates an expression as an x-series to `order`, with q-series
 * truncated at `q_order`, and renders it like `qrk eval`.
 *
 * # Safety
 * `expr` is a NUL-terminated string; `out` is valid for a pointer write.
 */
enum QrkStatus qrk_eval(const char *expr, uint32_t order, int64_t q_order, char **out);

/**
 * Runs the q-Fermat congruence check for `a` modulo `[p]`.
 *
 * # Safety
 * `passed` must be valid for a write.
 */
enum QrkStatus qrk_q_fermat_check(uint64_t a, uint64_t p, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QRK_H */
