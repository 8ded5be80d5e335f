#ifndef MATCHFIELD_H
#define MATCHFIELD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MfStatus {
  MF_STATUS_OK = 0,
  MF_STATUS_INVALID_ARGUMENT = 1,
  MF_STATUS_PARSE = 2,
  /**
   * A weight matrix with a tied minimum, or an incoherent field.
   */
  MF_STATUS_INCOHERENT = 3,
  MF_STATUS_NOT_POINTED = 4,
  MF_STATUS_PRECONDITION = 5,
  MF_STATUS_LIMIT_EXCEEDED = 6,
  MF_STATUS_UNSUPPORTED = 7,
  MF_STATUS_NULL_POINTER = 8,
  MF_STATUS_IO = 9,
  MF_STATUS_PANIC = 10,
} MfStatus;

/**
 * A matching field.
 */
typedef struct MfField MfField;

/**
 * A weight matrix with exact rational entries.
 */
typedef struct MfWeights MfWeights;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into this library from the same thread.
 */
const char *mf_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void mf_string_free(char *s);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum MfStatus mf_field_from_json(const char *json, struct MfField **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum MfStatus mf_field_diagonal(size_t k, size_t n, struct MfField **out);

/**
 * The 3-row block diagonal field for block sizes `parts[0..len]`.
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be writable.
 */
enum MfStatus mf_field_block_diagonal(const size_t *parts, size_t len, struct MfField **out);

/**
 * # Safety
 * `field` must be a live handle.
 */
size_t mf_field_k(const struct MfField *field);

/**
 * # Safety
 * `field` must be a live handle.
 */
size_t mf_field_n(const struct MfField *field);

/**
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum MfStatus mf_field_to_json(const struct MfField *field, char **out);

/**
 * # Safety
 * `field` must be NULL or a handle from this library, not yet freed.
 */
void mf_field_free(struct MfField *field);

/**
 * Accepts `{"rows": [...]}` or a bare array of rows; entries are integers or
 * rational strings such as `"-3/2"`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum MfStatus mf_weights_from_json(const char *json, struct MfWeights **out);

/**
 * Row-major integer entries of a `k × n` matrix.
 *
 * # Safety
 * `entries` must point to `k * n` readable values; `out` must be writable.
 */
enum MfStatus mf_weights_from_rows(const int64_t *entries,
                                   size_t k,
                                   size_t n,
                                   struct MfWeights **out);

/**
 * The induced field; fails with `MF_STATUS_INCOHERENT` naming the tied subset.
 *
 * # Safety
 * `weights` must be a live handle; `out` must be writable.
 */
enum MfStatus mf_weights_induce(const struct MfWeights *weights, struct MfField **out);

/**
 * # Safety
 * `weights` must be NULL or a handle from this library, not yet freed.
 */
void mf_weights_free(struct MfWeights *weights);

/**
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum MfStatus mf_field_is_coherent(const struct MfField *field, bool *out);

/**
 * The coherence certificate as JSON: a weight matrix, or a Farkas witness.
 *
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum MfStatus mf_field_coherence_json(const struct MfField *field, char **out);

/**
 * Coherence, hexagonality, quadratic generation up to `max_degree` and the
 * verdict, as one JSON report.
 *
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum MfStatus mf_field_check_json(const struct MfField *field, size_t max_degree, char **out);

/**
 * Minimal binomial generators of the field's ideal up to `max_degree`.
 *
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum MfStatus mf_field_ideal_json(const struct MfField *field, size_t max_degree, char **out);

/**
 * Vertices, f-vector and volumes of the field's polytope.
 *
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum MfStatus mf_field_polytope_json(const struct MfField *field, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATCHFIELD_H */
