#ifndef STRINGY_H
#define STRINGY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Largest `n` accepted by [`stringy_compute`].
 */
#define STRINGY_MAX_N 8

/*
 Largest `r` accepted by [`stringy_quotient_e`].
 */
#define STRINGY_MAX_R 8

/*
 Largest `n` accepted by [`stringy_character`].
 */
#define STRINGY_MAX_CHARACTER_N 12

typedef enum StringyStatus {
  STRINGY_STATUS_OK = 0,
  STRINGY_STATUS_INVALID_ARGUMENT = 1,
  STRINGY_STATUS_OUT_OF_RANGE = 2,
  STRINGY_STATUS_NULL_POINTER = 3,
  STRINGY_STATUS_OVERFLOW = 4,
  STRINGY_STATUS_BUFFER_TOO_SMALL = 5,
  STRINGY_STATUS_INTERNAL = 6,
} StringyStatus;

/*
 Opaque handle to a computed stringy E-polynomial with its sectors.
 */
typedef struct StringyE StringyE;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Computes `E_st(Z^(n))` for `2 <= n <= STRINGY_MAX_N`. On success `*out`
 owns a handle to release with [`stringy_free`].

 # Safety
 `out` must be null or valid for writes.
 */
enum StringyStatus stringy_compute(size_t n, struct StringyE **out);

/*
 Releases a handle. Null is ignored.

 # Safety
 `h` must be null or come from [`stringy_compute`] and not be freed twice.
 */
void stringy_free(struct StringyE *h);

/*
 # Safety
 `h` must be a live handle or null; `n` must be null or valid for writes.
 */
enum StringyStatus stringy_n(const struct StringyE *h, size_t *n);

/*
 # Safety
 As for [`stringy_n`].
 */
enum StringyStatus stringy_sector_count(const struct StringyE *h, size_t *count);

/*
 Coefficients of the total.

 # Safety
 `h` must be a live handle; `buf` must be valid for `cap` writes;
 `len` must be valid for writes.
 */
enum StringyStatus stringy_total(const struct StringyE *h, int64_t *buf, size_t cap, size_t *len);

/*
 Coefficients of the untwisted sector.

 # Safety
 As for [`stringy_total`].
 */
enum StringyStatus stringy_untwisted(const struct StringyE *h,
                                     int64_t *buf,
                                     size_t cap,
                                     size_t *len);

/*
 Coefficients of the sector at `index`, `e_factor · L^exponent`.

 # Safety
 As for [`stringy_total`].
 */
enum StringyStatus stringy_sector_polynomial(const struct StringyE *h,
                                             size_t index,
                                             int64_t *buf,
                                             size_t cap,
                                             size_t *len);

/*
 The full result as JSON. Release the string with [`stringy_string_free`].

 # Safety
 `h` must be a live handle; `out` must be valid for writes.
 */
enum StringyStatus stringy_to_json(const struct StringyE *h, char **out);

/*
 `E(X(A_{r-1}) / S_μ)` for a partition `μ` of `r`, given as `mu_len`
 parts in any order.

 # Safety
 `mu` must be valid for `mu_len` reads; `buf`, `cap`, `len` as for
 [`stringy_total`].
 */
enum StringyStatus stringy_quotient_e(const size_t *mu,
                                      size_t mu_len,
                                      int64_t *buf,
                                      size_t cap,
                                      size_t *len);

/*
 `χ[A_{n-1}, q]` rendered in the h-basis, e.g. `h3 + (h1*h2 + h3)*q + h3*q^2`.
 Release the string with [`stringy_string_free`].

 # Safety
 `out` must be valid for writes.
 */
enum StringyStatus stringy_character(size_t n, char **out);

/*
 # Safety
 `s` must be null or a string returned by this library, freed once.
 */
void stringy_string_free(char *s);

/*
 Message for the last failed call on this thread, or null after a
 successful one. Valid until the next call on the same thread.
 */
const char *stringy_last_error(void);

/*
 Library version, a static string.
 */
const char *stringy_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRINGY_H */
