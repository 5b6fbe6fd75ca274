#ifndef PA_H
#define PA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Largest `max_n` accepted by [`pa_sequence_new`].
#define PA_SEQUENCE_MAX_N 5000

// Which sequence [`pa_sequence_value`] reads.
typedef enum PaSequenceKind {
  PA_SEQUENCE_KIND_PA = 0,
  PA_SEQUENCE_KIND_PA_O = 1,
} PaSequenceKind;

typedef enum PaStatus {
  PA_STATUS_OK = 0,
  PA_STATUS_NULL_POINTER = 1,
  PA_STATUS_INVALID_ARGUMENT = 2,
  PA_STATUS_DOMAIN = 3,
  PA_STATUS_BUFFER_TOO_SMALL = 4,
  PA_STATUS_COMPUTATION = 5,
  PA_STATUS_VERIFICATION_FAILED = 6,
  PA_STATUS_PANIC = 7,
} PaStatus;

// Opaque partition handle.
typedef struct PaPartition PaPartition;

// Opaque handle holding `pa(n)` and `pa_o(n)` for `1 <= n <= len`.
typedef struct PaSequence PaSequence;

// `(a + b sqrt5) / den` with machine-integer parts.
typedef struct PaQuad5 {
  int64_t a;
  int64_t b;
  int64_t den;
} PaQuad5;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code.
const char *pa_status_message(enum PaStatus status);

// Builds a partition from `len` positive parts in any order.
//
// # Safety
// `parts` must point to `len` readable values (or be null with `len == 0`);
// `out` must be writable.
enum PaStatus pa_partition_new(const uint64_t *parts, size_t len, struct PaPartition **out);

// # Safety
// `p` must be null or a handle from this library not yet freed.
void pa_partition_free(struct PaPartition *p);

// Number of parts, 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t pa_partition_len(const struct PaPartition *p);

// Sum of the parts, 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
uint64_t pa_partition_n(const struct PaPartition *p);

// Copies the parts, largest first, into `buf`.
//
// # Safety
// `p` must be a live handle, `buf` writable for `cap` values, `written`
// null or writable.
enum PaStatus pa_partition_parts(const struct PaPartition *p,
                                 uint64_t *buf,
                                 size_t cap,
                                 size_t *written);

// # Safety
// `p` must be a live handle and `out` writable.
enum PaStatus pa_partition_is_pa(const struct PaPartition *p, bool *out);

// Whether every distinct part except the largest has odd multiplicity.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum PaStatus pa_partition_is_postar(const struct PaPartition *p, bool *out);

// Conjugate partition as a new handle.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum PaStatus pa_partition_conjugate(const struct PaPartition *p, struct PaPartition **out);

// Image of a PA partition of `n` under the injection into `PA(n+1)`.
// Returns `PA_STATUS_DOMAIN` for partitions that are not PA.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum PaStatus pa_partition_phi(const struct PaPartition *p, struct PaPartition **out);

// Computes `pa(n)` and `pa_o(n)` for `1 <= n <= max_n`.
//
// # Safety
// `out` must be writable.
enum PaStatus pa_sequence_new(size_t max_n, struct PaSequence **out);

// # Safety
// `s` must be null or a live handle.
void pa_sequence_free(struct PaSequence *s);

// Largest available `n`, 0 for a null handle.
//
// # Safety
// `s` must be null or a live handle.
size_t pa_sequence_len(const struct PaSequence *s);

// Writes the decimal value of `pa(n)` or `pa_o(n)` into `buf`.
//
// # Safety
// `s` must be a live handle, `buf` writable for `buf_len` bytes, `written`
// null or writable.
enum PaStatus pa_sequence_value(const struct PaSequence *s,
                                enum PaSequenceKind kind,
                                size_t n,
                                char *buf,
                                size_t buf_len,
                                size_t *written);

// Checks Heine's second transformation with `z = q` for parameters
// `a, b, c` as an identity of series modulo `q^(order+1)`.
//
// # Safety
// All pointers must be valid.
enum PaStatus pa_heine_check(const struct PaQuad5 *a,
                             const struct PaQuad5 *b,
                             const struct PaQuad5 *c,
                             size_t order,
                             bool *out);

// `A = pi^2/12 + 2 log^2(phi)` with `digits` decimal places, `digits >= 15`.
//
// # Safety
// `buf` writable for `buf_len` bytes, `written` null or writable.
enum PaStatus pa_constant_a(size_t digits, char *buf, size_t buf_len, size_t *written);

// `log(sqrt(A)/(2 pi n)) + 2 sqrt(A n)`.
//
// # Safety
// `out` must be writable.
enum PaStatus pa_ingham_log_estimate(uint64_t n, double *out);

// Runs a verification suite with default parameters and hands back its
// JSON report, to be released with [`pa_string_free`]. Returns
// `PA_STATUS_VERIFICATION_FAILED` (with the report still written) when a
// check fails.
//
// # Safety
// `suite` must be a NUL-terminated string and `out_json` writable.
enum PaStatus pa_verify_suite_json(const char *suite, char **out_json);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void pa_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PA_H */
