#ifndef STMULT_H
#define STMULT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum {
  STMULT_STATUS_OK = 0,
  STMULT_STATUS_NULL_POINTER = 1,
  STMULT_STATUS_INVALID_ARGUMENT = 2,
  // A theorem hypothesis does not hold for the requested input.
  STMULT_STATUS_PRECONDITION = 3,
  STMULT_STATUS_OUT_OF_RANGE = 4,
  // The value does not fit the requested integer type.
  STMULT_STATUS_OVERFLOW = 5,
  STMULT_STATUS_INEXACT = 6,
  STMULT_STATUS_INTERNAL = 7,
} StmultStatus;

// Which module is tensored with `S(V) x Det^k`.
typedef enum {
  // `wedge^m`, `m` from `m_or_ell`.
  STMULT_FACTOR_WEDGE = 0,
  // `(wedge^m)*`.
  STMULT_FACTOR_WEDGE_DUAL = 1,
  // `wedge^nu`, parts from `parts`.
  STMULT_FACTOR_WEDGE_NU = 2,
  // `(wedge^nu)*`.
  STMULT_FACTOR_WEDGE_NU_DUAL = 3,
  // `L(mu)`, parts from `parts`.
  STMULT_FACTOR_SIMPLE = 4,
  // `L(mu)*`.
  STMULT_FACTOR_SIMPLE_DUAL = 5,
  // `V^{x l}`, `l` from `m_or_ell`.
  STMULT_FACTOR_POWER_DET = 6,
  STMULT_FACTOR_NONE = 7,
} StmultFactor;

// Group parameters `GL_n(p^r)`.
typedef struct StmultParams StmultParams;

// A truncated multiplicity series with the name of the result it came from.
typedef struct StmultSeries StmultSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failed call on this thread, or an empty string.
// Valid until the next call into this library on the same thread.
const char *stmult_last_error(void);

// # Safety
// `out` must be a valid pointer to writable storage.
StmultStatus stmult_params_new(uintptr_t n, uint64_t p, uint32_t r, StmultParams **out);

// # Safety
// `params` must be null or come from `stmult_params_new` and not be freed twice.
void stmult_params_free(StmultParams *params);

// # Safety
// `params` must be a live handle and `out` writable.
StmultStatus stmult_params_q(const StmultParams *params, int64_t *out);

// Multiplicity series of St in `S(V) x M x Det^k` up to `t^trunc`.
// `m_or_ell` is read for `Wedge`, `WedgeDual` and `PowerDet`; `parts`
// (weakly decreasing, `nparts` entries) for the partition-valued factors.
//
// # Safety
// `params` must be a live handle, `parts` must point to `nparts` values
// (or `nparts` be zero) and `out` must be writable.
StmultStatus stmult_steinberg_series(const StmultParams *params,
                                     StmultFactor factor,
                                     uintptr_t m_or_ell,
                                     const uintptr_t *parts,
                                     uintptr_t nparts,
                                     int64_t k,
                                     int64_t trunc,
                                     StmultSeries **out);

// Composition multiplicity series of `L((q-1) rho - mu + k)` (`part` 1) or
// `L((q-1) rho + w0 mu + k)` (`part` 2) in `S(V)`.
//
// # Safety
// As for `stmult_steinberg_series`.
StmultStatus stmult_composition_series(const StmultParams *params,
                                       const uintptr_t *parts,
                                       uintptr_t nparts,
                                       int64_t k,
                                       uint32_t part,
                                       int64_t trunc,
                                       StmultSeries **out);

// # Safety
// `series` must be null or a handle from this library, freed once.
void stmult_series_free(StmultSeries *series);

// Lowest stored exponent; coefficients below it are zero.
//
// # Safety
// `series` must be a live handle and `out` writable.
StmultStatus stmult_series_shift(const StmultSeries *series, int64_t *out);

// # Safety
// `series` must be a live handle and `out` writable.
StmultStatus stmult_series_trunc(const StmultSeries *series, int64_t *out);

// Name of the result the series was computed from. Owned by the handle.
//
// # Safety
// `series` must be a live handle.
const char *stmult_series_theorem(const StmultSeries *series);

// Coefficient of `t^a`; `Overflow` if it does not fit in 64 bits.
//
// # Safety
// `series` must be a live handle and `out` writable.
StmultStatus stmult_series_coefficient(const StmultSeries *series, int64_t a, int64_t *out);

// Coefficient of `t^a` as a decimal string; free with `stmult_string_free`.
//
// # Safety
// `series` must be a live handle and `out` writable.
StmultStatus stmult_series_coefficient_str(const StmultSeries *series, int64_t a, char **out);

// `{"shift":..,"trunc":..,"coeffs":[..]}`; free with `stmult_string_free`.
//
// # Safety
// `series` must be a live handle and `out` writable.
StmultStatus stmult_series_to_json(const StmultSeries *series, char **out);

// Parses canonical series JSON into a new handle.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
StmultStatus stmult_series_from_json(const char *json, StmultSeries **out);

// PIM decomposition of `St x wedge^nu x Det^k` (or the dual when `dual` is
// nonzero) as `[{"weight":[..],"mult":m,"dim":d}, ..]`; free with
// `stmult_string_free`.
//
// # Safety
// `params` must be a live handle, `parts` point to `nparts` values and `out`
// be writable.
StmultStatus stmult_pim_json(const StmultParams *params,
                             const uintptr_t *parts,
                             uintptr_t nparts,
                             int64_t k,
                             int32_t dual,
                             char **out);

// Coinvariant-algebra multiplicity of the `part` 1 or 2 target as
// `{"poly":{..series..},"value_at_1":..,"target":[..],"det_shift":..}`;
// free with `stmult_string_free`.
//
// # Safety
// As for `stmult_pim_json`.
StmultStatus stmult_coinv_json(const StmultParams *params,
                               const uintptr_t *parts,
                               uintptr_t nparts,
                               int64_t k,
                               uint32_t part,
                               char **out);

// # Safety
// `s` must be null or a string returned by this library, freed once.
void stmult_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STMULT_H */
