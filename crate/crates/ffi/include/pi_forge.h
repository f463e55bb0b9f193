#ifndef PI_FORGE_H
#define PI_FORGE_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum PfStatus {
  PF_STATUS_OK = 0,
  PF_STATUS_NULL_POINTER = 1,
  PF_STATUS_INVALID_UTF8 = 2,
  PF_STATUS_PARSE = 3,
  PF_STATUS_INVALID_SPEC = 4,
  PF_STATUS_UNKNOWN_ALGEBRA = 5,
  PF_STATUS_MODE = 6,
  PF_STATUS_DEGREE_CAP = 7,
  PF_STATUS_PRECONDITION = 8,
  PF_STATUS_NOT_AN_IDENTITY = 9,
  PF_STATUS_IO = 10,
  PF_STATUS_PANIC = 11,
} PfStatus;

/**
 * Opaque algebra handle.
 */
typedef struct PfAlgebra PfAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a built-in algebra (`A1`, `A2`, `A3`, `A-star`, `A1-star`, `A-trivial`).
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PfStatus pf_algebra_builtin(const char *name, struct PfAlgebra **out);

/**
 * Creates an algebra from a JSON spec.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PfStatus pf_algebra_from_json(const char *json, struct PfAlgebra **out);

/**
 * Releases an algebra; null is ignored.
 *
 * # Safety
 * `alg` must come from this library and not be used afterwards.
 */
void pf_algebra_free(struct PfAlgebra *alg);

/**
 * Dimension of the algebra.
 *
 * # Safety
 * `alg` and `out` must be valid pointers.
 */
enum PfStatus pf_algebra_dim(const struct PfAlgebra *alg, size_t *out);

/**
 * Decides whether a polynomial (in the algebra's own mode) is an identity;
 * writes 1 or 0 to `holds`.
 *
 * # Safety
 * `alg`, `poly` and `holds` must be valid pointers.
 */
enum PfStatus pf_is_identity(const struct PfAlgebra *alg, const char *poly, int32_t *holds);

/**
 * Dimension of P/Id for the signature `counts[0..len]`.
 *
 * # Safety
 * `counts` must point to `len` values; `alg` and `out` must be valid.
 */
enum PfStatus pf_quotient_dim(const struct PfAlgebra *alg,
                              const size_t *counts,
                              size_t len,
                              size_t *out);

/**
 * Multiplicity of a shape tuple written like `(3,1)|(1)`.
 *
 * # Safety
 * `alg`, `shapes` and `out` must be valid pointers.
 */
enum PfStatus pf_multiplicity(const struct PfAlgebra *alg, const char *shapes, size_t *out);

/**
 * Verifies a bundled generator set against its algebra through `max_degree`;
 * writes 1 or 0 to `passed` and the verified degree to `through`.
 *
 * # Safety
 * `name`, `passed` and `through` must be valid pointers.
 */
enum PfStatus pf_verify_bundled(const char *name,
                                size_t max_degree,
                                int32_t *passed,
                                size_t *through);

/**
 * Last error message of this thread, or null. Free with [`pf_string_free`].
 */
char *pf_last_error_message(void);

/**
 * Releases a string returned by the library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void pf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PI_FORGE_H */
