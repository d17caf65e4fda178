#ifndef COMMUTATOR_H
#define COMMUTATOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CommStatus {
  COMM_STATUS_OK = 0,
  COMM_STATUS_ARGUMENT = 1,
  COMM_STATUS_PRECONDITION = 2,
  COMM_STATUS_BUDGET = 3,
  COMM_STATUS_PARSE = 4,
  COMM_STATUS_VALIDATION = 5,
  COMM_STATUS_IO = 6,
  COMM_STATUS_NULL_POINTER = 7,
  COMM_STATUS_UTF8 = 8,
  COMM_STATUS_PANIC = 9,
} CommStatus;

/**
 * An algebra handle.
 */
typedef struct CommAlgebra CommAlgebra;

/**
 * A congruence lattice handle.
 */
typedef struct CommLattice CommLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library on the same thread.
 */
const char *comm_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void comm_string_free(char *s);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CommStatus comm_algebra_from_json(const char *json, struct CommAlgebra **out);

/**
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum CommStatus comm_algebra_from_file(const char *path, struct CommAlgebra **out);

/**
 * A bundled fixture by name, e.g. `"z2s2"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum CommStatus comm_algebra_bundled(const char *name, struct CommAlgebra **out);

/**
 * # Safety
 * `alg` must be null or a handle from this library not yet freed.
 */
void comm_algebra_free(struct CommAlgebra *alg);

/**
 * Universe size, or 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t comm_algebra_size(const struct CommAlgebra *alg);

/**
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
enum CommStatus comm_con_lattice(const struct CommAlgebra *alg,
                                 size_t budget,
                                 struct CommLattice **out);

/**
 * # Safety
 * `lat` must be null or a handle from this library not yet freed.
 */
void comm_lattice_free(struct CommLattice *lat);

/**
 * Number of congruences, or 0 for a null handle.
 *
 * # Safety
 * `lat` must be null or a live handle.
 */
size_t comm_lattice_len(const struct CommLattice *lat);

/**
 * The `i`-th congruence as partition text; index 0 is the equality relation.
 *
 * # Safety
 * `lat` must be a live handle; `out` must be writable.
 */
enum CommStatus comm_lattice_get(const struct CommLattice *lat, size_t i, char **out);

/**
 * `C(alpha,beta;delta)`.
 *
 * # Safety
 * `alg` must be a live handle; the partitions NUL-terminated strings; `out` writable.
 */
enum CommStatus comm_centralizes(const struct CommAlgebra *alg,
                                 const char *alpha,
                                 const char *beta,
                                 const char *delta,
                                 bool *out);

/**
 * `[alpha,beta]` as partition text.
 *
 * # Safety
 * `alg` must be a live handle; the partitions NUL-terminated strings; `out` writable.
 */
enum CommStatus comm_commutator(const struct CommAlgebra *alg,
                                const char *alpha,
                                const char *beta,
                                char **out);

/**
 * The ten properties and the quasi-identity as one JSON document.
 *
 * # Safety
 * `alg` must be a live handle; `out` writable.
 */
enum CommStatus comm_check_all_json(const struct CommAlgebra *alg,
                                    size_t lattice_budget,
                                    char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMMUTATOR_H */
