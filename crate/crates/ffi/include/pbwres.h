#ifndef PBWRES_H
#define PBWRES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PbwStatus {
  PBW_STATUS_OK = 0,
  /**
   * A mathematical check did not pass, or a cap was hit.
   */
  PBW_STATUS_CHECK_FAILED = 1,
  /**
   * Malformed or inconsistent input.
   */
  PBW_STATUS_INPUT_ERROR = 2,
  PBW_STATUS_NULL_POINTER = 3,
  PBW_STATUS_INVALID_UTF8 = 4,
  /**
   * A panic was caught at the boundary.
   */
  PBW_STATUS_INTERNAL = 5,
} PbwStatus;

/**
 * Opaque handle to a validated algebra.
 */
typedef struct PbwAlgebra PbwAlgebra;

/**
 * Opaque handle to a resolution.
 */
typedef struct PbwResolution PbwResolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library; valid until the next call on the same thread.
 */
const char *pbw_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void pbw_string_free(char *s);

/**
 * Parses and validates an algebra file. On rejection returns `CheckFailed`
 * and the violations are in the last error.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PbwStatus pbw_algebra_parse(const char *text, struct PbwAlgebra **out);

/**
 * # Safety
 * `alg` must be null or a handle from [`pbw_algebra_parse`], freed once.
 */
void pbw_algebra_free(struct PbwAlgebra *alg);

/**
 * Number of generators, or 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t pbw_algebra_generator_count(const struct PbwAlgebra *alg);

/**
 * Product `f·g` in canonical text form.
 *
 * # Safety
 * Pointers must be valid; `out` receives a string for [`pbw_string_free`].
 */
enum PbwStatus pbw_multiply(const struct PbwAlgebra *alg, const char *f, const char *g, char **out);

/**
 * Weighted degree of a nonzero polynomial.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PbwStatus pbw_degree(const struct PbwAlgebra *alg, const char *f, uint32_t *out);

/**
 * Reduced Gröbner basis of the generators of a module file, one element
 * per line. `step_cap == 0` selects the default cap.
 *
 * # Safety
 * Pointers must be valid; `out` receives a string for [`pbw_string_free`].
 */
enum PbwStatus pbw_groebner_basis(const struct PbwAlgebra *alg,
                                  const char *module_text,
                                  size_t step_cap,
                                  char **out);

/**
 * Minimal filtered free resolution of the quotient presented by a module
 * file. `max_length == 0` means the number of generators; `step_cap == 0`
 * the default cap.
 *
 * # Safety
 * Pointers must be valid; `out` receives a handle for
 * [`pbw_resolution_free`].
 */
enum PbwStatus pbw_resolve(const struct PbwAlgebra *alg,
                           const char *module_text,
                           size_t max_length,
                           size_t step_cap,
                           struct PbwResolution **out);

/**
 * Reads a resolution file.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PbwStatus pbw_resolution_parse(const struct PbwAlgebra *alg,
                                    const char *text,
                                    struct PbwResolution **out);

/**
 * # Safety
 * `res` must be null or a live handle, freed once.
 */
void pbw_resolution_free(struct PbwResolution *res);

/**
 * Number of maps, or 0 for a null handle.
 *
 * # Safety
 * `res` must be null or a live handle.
 */
size_t pbw_resolution_length(const struct PbwResolution *res);

/**
 * Rank of `L_step`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PbwStatus pbw_resolution_rank(const struct PbwResolution *res, size_t step, size_t *out);

/**
 * Resolution in the text format.
 *
 * # Safety
 * Pointers must be valid; `out` receives a string for [`pbw_string_free`].
 */
enum PbwStatus pbw_resolution_to_string(const struct PbwResolution *res, char **out);

/**
 * Runs every resolution check. `CheckFailed` names the failing checks in
 * the last error.
 *
 * # Safety
 * `res` must be a live handle.
 */
enum PbwStatus pbw_resolution_verify(const struct PbwResolution *res);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PBWRES_H */
