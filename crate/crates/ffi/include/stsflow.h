#ifndef STSFLOW_H
#define STSFLOW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum StsfStatus {
  STSF_STATUS_OK = 0,
  /**
   * Null pointer, bad parameter or failed precondition.
   */
  STSF_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The requested object does not exist (no flow, no covering function).
   */
  STSF_STATUS_INFEASIBLE = 2,
  /**
   * Input is not a valid system or certificate.
   */
  STSF_STATUS_VALIDATION = 3,
  STSF_STATUS_IO = 4,
  /**
   * Broken invariant or a panic inside the library.
   */
  STSF_STATUS_INTERNAL = 5,
} StsfStatus;

/**
 * A verified flow certificate.
 */
typedef struct StsfFlowCert StsfFlowCert;

/**
 * A Steiner triple system.
 */
typedef struct StsfSts StsfSts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null.
 *
 * The pointer stays valid until the next call into the library on this thread.
 */
const char *stsf_last_error_message(void);

/**
 * Bose construction of order `3m`, `m` odd.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StsfStatus stsf_sts_bose(uint32_t m, struct StsfSts **out);

/**
 * Projective system of order `2^r − 1`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StsfStatus stsf_sts_hamming(uint32_t r, struct StsfSts **out);

/**
 * Validates `count` triples on points `1..=n`, read as `3·count` consecutive values.
 *
 * # Safety
 * `triples` must point to `3·count` readable values and `out` must be valid.
 */
enum StsfStatus stsf_sts_from_triples(uint32_t n,
                                      const uint32_t *triples,
                                      uintptr_t count,
                                      struct StsfSts **out);

/**
 * Reads a system from a text file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` must be valid.
 */
enum StsfStatus stsf_sts_read(const char *path, struct StsfSts **out);

/**
 * Doubles `base` to order `2n+1`; `tau` is `zero`, `one` or `seed:N`.
 *
 * # Safety
 * `base` must be a live handle, `tau` a NUL-terminated string, `out` valid.
 */
enum StsfStatus stsf_sts_assmuss_mattson(const struct StsfSts *base,
                                         const char *tau,
                                         struct StsfSts **out);

/**
 * Number of points, 0 for a null handle.
 *
 * # Safety
 * `sts` must be null or a live handle.
 */
uint32_t stsf_sts_order(const struct StsfSts *sts);

/**
 * Number of blocks, 0 for a null handle.
 *
 * # Safety
 * `sts` must be null or a live handle.
 */
uintptr_t stsf_sts_block_count(const struct StsfSts *sts);

/**
 * Writes the three points of block `index` to `out[0..3]`.
 *
 * # Safety
 * `sts` must be a live handle and `out` must have room for three values.
 */
enum StsfStatus stsf_sts_block(const struct StsfSts *sts, uintptr_t index, uint32_t *out);

/**
 * Rank over GF(2) of the block-point incidence matrix.
 *
 * # Safety
 * `sts` must be a live handle and `out` valid.
 */
enum StsfStatus stsf_sts_binary_rank(const struct StsfSts *sts, uintptr_t *out);

/**
 * Releases a system. Null is ignored.
 *
 * # Safety
 * `sts` must be null or a handle not yet freed.
 */
void stsf_sts_free(struct StsfSts *sts);

/**
 * Zero-sum flow of value at most 5 on the doubling of `base` by `tau`.
 *
 * # Safety
 * `base` must be a live handle, `tau` a NUL-terminated string, `out` valid.
 */
enum StsfStatus stsf_flow_am_five(const struct StsfSts *base,
                                  const char *tau,
                                  struct StsfFlowCert **out);

/**
 * Smallest-value flow up to `max_value`. Returns `INFEASIBLE` with `*out`
 * null when there is none.
 *
 * # Safety
 * `sts` must be a live handle and `out` valid.
 */
enum StsfStatus stsf_flow_search(const struct StsfSts *sts,
                                 int64_t max_value,
                                 struct StsfFlowCert **out);

/**
 * Parses and re-verifies a JSON certificate.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` valid.
 */
enum StsfStatus stsf_cert_from_json(const char *json, struct StsfFlowCert **out);

/**
 * `‖v‖∞ + 1`, 0 for a null handle.
 *
 * # Safety
 * `cert` must be null or a live handle.
 */
int64_t stsf_cert_value(const struct StsfFlowCert *cert);

/**
 * Length of the flow vector, 0 for a null handle.
 *
 * # Safety
 * `cert` must be null or a live handle.
 */
uintptr_t stsf_cert_len(const struct StsfFlowCert *cert);

/**
 * Copies the flow vector into `buf`, which must hold `len` values with
 * `len` equal to [`stsf_cert_len`].
 *
 * # Safety
 * `cert` must be a live handle and `buf` must have room for `len` values.
 */
enum StsfStatus stsf_cert_entries(const struct StsfFlowCert *cert, int64_t *buf, uintptr_t len);

/**
 * The system the certificate is about, as a new handle.
 *
 * # Safety
 * `cert` must be a live handle and `out` valid.
 */
enum StsfStatus stsf_cert_sts(const struct StsfFlowCert *cert, struct StsfSts **out);

/**
 * Serializes a certificate. Release the string with [`stsf_string_free`].
 *
 * # Safety
 * `cert` must be a live handle and `out` valid.
 */
enum StsfStatus stsf_cert_to_json(const struct StsfFlowCert *cert, char **out);

/**
 * Releases a certificate. Null is ignored.
 *
 * # Safety
 * `cert` must be null or a handle not yet freed.
 */
void stsf_cert_free(struct StsfFlowCert *cert);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void stsf_string_free(char *s);

/**
 * Smallest `‖Wᵀu‖∞ + 1` over nowhere-zero first eigenvectors of `J(n,3)`, `n > 63`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StsfStatus stsf_johnson_m1_jn3(uint64_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STSFLOW_H */
