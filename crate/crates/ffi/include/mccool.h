#ifndef MCCOOL_H
#define MCCOOL_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status returned by every fallible call.
 */
typedef enum MccoolStatus {
  MCCOOL_STATUS_OK = 0,
  MCCOOL_STATUS_NULL_POINTER = 1,
  MCCOOL_STATUS_INVALID_UTF8 = 2,
  MCCOOL_STATUS_INVALID_ARGUMENT = 3,
  MCCOOL_STATUS_COMPUTATION = 4,
  MCCOOL_STATUS_PANIC = 5,
} MccoolStatus;

/**
 * Kernel of the Johnson morphism in one degree.
 */
typedef struct MccoolKernel MccoolKernel;

/**
 * A homogeneous polynomial over the symbols `a, b, c`.
 */
typedef struct MccoolPolynomial MccoolPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the next call.
 */
const char *mccool_last_error(void);

/**
 * Library version; a static string.
 */
const char *mccool_version(void);

/**
 * Rank of the degree-`k` part of the free Lie ring on `n` generators.
 */
uint64_t mccool_witt_dimension(size_t n, size_t k);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void mccool_string_free(char *s);

/**
 * Writes a new handle for `omega` to `out`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum MccoolStatus mccool_omega(struct MccoolPolynomial **out);

/**
 * Parses the JSON form of a polynomial over `a, b, c`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` valid for writes.
 */
enum MccoolStatus mccool_polynomial_from_json(const char *json, struct MccoolPolynomial **out);

/**
 * JSON form of a polynomial; free with [`mccool_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum MccoolStatus mccool_polynomial_to_json(const struct MccoolPolynomial *p, char **out);

/**
 * Readable form of a polynomial; free with [`mccool_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum MccoolStatus mccool_polynomial_to_string(const struct MccoolPolynomial *p, char **out);

/**
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum MccoolStatus mccool_polynomial_degree(const struct MccoolPolynomial *p, size_t *out);

/**
 * Sets `out` to whether the Johnson morphism vanishes on `p`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum MccoolStatus mccool_tau_vanishes(const struct MccoolPolynomial *p, bool *out);

/**
 * # Safety
 * `p` must come from this library and not be freed twice.
 */
void mccool_polynomial_free(struct MccoolPolynomial *p);

/**
 * Computes the kernel of the Johnson morphism in degree `k` (1 to 9).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum MccoolStatus mccool_kernel_compute(size_t k, struct MccoolKernel **out);

/**
 * # Safety
 * `k` must be a live handle and `out` valid for writes.
 */
enum MccoolStatus mccool_kernel_dim(const struct MccoolKernel *k, size_t *out);

/**
 * # Safety
 * `k` must be a live handle and `out` valid for writes.
 */
enum MccoolStatus mccool_kernel_domain_dim(const struct MccoolKernel *k, size_t *out);

/**
 * New handle for basis element `index` of the integral kernel.
 *
 * # Safety
 * `k` must be a live handle and `out` valid for writes.
 */
enum MccoolStatus mccool_kernel_basis_element(const struct MccoolKernel *k,
                                              size_t index,
                                              struct MccoolPolynomial **out);

/**
 * Character values on `id`, `(12)`, `(123)` written to `out[0..3]`.
 *
 * # Safety
 * `k` must be a live handle and `out` valid for three writes.
 */
enum MccoolStatus mccool_kernel_character(const struct MccoolKernel *k, int64_t *out);

/**
 * Kernel report as JSON; free with [`mccool_string_free`].
 *
 * # Safety
 * `k` must be a live handle and `out` valid for writes.
 */
enum MccoolStatus mccool_kernel_to_json(const struct MccoolKernel *k, char **out);

/**
 * # Safety
 * `k` must come from this library and not be freed twice.
 */
void mccool_kernel_free(struct MccoolKernel *k);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MCCOOL_H */
