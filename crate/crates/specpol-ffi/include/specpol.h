/* C interface to the specpol second-order spectrum library. */

#ifndef SPECPOL_H
#define SPECPOL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum SpecpolStatus {
  SPECPOL_STATUS_OK = 0,
  SPECPOL_STATUS_NULL_POINTER = 1,
  SPECPOL_STATUS_INVALID_ARGUMENT = 2,
  SPECPOL_STATUS_NUMERICAL_FAILURE = 3,
  SPECPOL_STATUS_BUFFER_TOO_SMALL = 4,
} SpecpolStatus;

/**
 * Moment matrices (A, B) of a model operator on a Fourier window.
 */
typedef struct SpecpolMoments SpecpolMoments;

/**
 * Computed second-order spectrum (2d points, conjugate-closed).
 */
typedef struct SpecpolSpectrum SpecpolSpectrum;

/**
 * Two-valued symbol together with the set E where it takes `inside_value`.
 */
typedef struct SpecpolSymbol SpecpolSymbol;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *specpol_last_error_message(void);

/**
 * Builds the symbol taking `inside_value` on E and `outside_value` on the
 * complement. `endpoints` holds `n_intervals` pairs (lo, hi) in radians,
 * each inside (−π, π], sorted and disjoint.
 *
 * # Safety
 * `endpoints` must point to `2 * n_intervals` readable doubles and `out`
 * to a writable pointer slot.
 */
enum SpecpolStatus specpol_symbol_two_valued(const double *endpoints,
                                             uintptr_t n_intervals,
                                             double inside_value,
                                             double outside_value,
                                             struct SpecpolSymbol **out);

/**
 * # Safety
 * `symbol` must be a pointer from `specpol_symbol_two_valued`, not yet freed.
 */
void specpol_symbol_free(struct SpecpolSymbol *symbol);

/**
 * Moment matrices of the multiplication operator on the window −n..n.
 *
 * # Safety
 * `symbol` must be a live symbol handle and `out` a writable pointer slot.
 */
enum SpecpolStatus specpol_moments_multiplication(const struct SpecpolSymbol *symbol,
                                                  uintptr_t n,
                                                  struct SpecpolMoments **out);

/**
 * Moment matrices of the operator perturbed by the rank-one term
 * a⟨·, ψ⟩ψ with constant unit-norm ψ.
 *
 * # Safety
 * `symbol` must be a live symbol handle and `out` a writable pointer slot.
 */
enum SpecpolStatus specpol_moments_rank_one_constant(const struct SpecpolSymbol *symbol,
                                                     double coupling,
                                                     uintptr_t n,
                                                     struct SpecpolMoments **out);

/**
 * Same with band-limited ψ given by `len` centered coefficients
 * (`len` odd; unit ℓ² norm; support must fit inside the window).
 *
 * # Safety
 * `coeff_re`/`coeff_im` must each point to `len` readable doubles.
 */
enum SpecpolStatus specpol_moments_rank_one(const struct SpecpolSymbol *symbol,
                                            double coupling,
                                            const double *coeff_re,
                                            const double *coeff_im,
                                            uintptr_t len,
                                            uintptr_t n,
                                            struct SpecpolMoments **out);

/**
 * Matrix dimension d (= 2n+1 for window assemblies); 0 for null.
 *
 * # Safety
 * `moments` must be null or a live moments handle.
 */
uintptr_t specpol_moments_dim(const struct SpecpolMoments *moments);

/**
 * # Safety
 * `moments` must be a pointer from a moments constructor, not yet freed.
 */
void specpol_moments_free(struct SpecpolMoments *moments);

/**
 * Computes the second-order spectrum (all 2d pencil roots).
 *
 * # Safety
 * `moments` must be a live moments handle and `out` a writable pointer slot.
 */
enum SpecpolStatus specpol_spec2(const struct SpecpolMoments *moments,
                                 struct SpecpolSpectrum **out);

/**
 * Number of spectrum points (2d).
 *
 * # Safety
 * `spectrum` must be null or a live spectrum handle.
 */
uintptr_t specpol_spec2_len(const struct SpecpolSpectrum *spectrum);

/**
 * Copies the points (sorted by re, then im) into caller buffers.
 *
 * # Safety
 * `out_re` and `out_im` must each point to at least `capacity` writable
 * doubles; `spectrum` must be a live spectrum handle.
 */
enum SpecpolStatus specpol_spec2_points(const struct SpecpolSpectrum *spectrum,
                                        double *out_re,
                                        double *out_im,
                                        uintptr_t capacity);

/**
 * # Safety
 * `spectrum` must be a pointer from `specpol_spec2`, not yet freed.
 */
void specpol_spec2_free(struct SpecpolSpectrum *spectrum);

/**
 * Enclosure intervals [Re z − |Im z|, Re z + |Im z|] of the upper-half
 * points, sorted by lower endpoint. Pass a negative `max_half_width` to
 * disable the width filter. Writes up to `capacity` intervals and stores
 * the total available count in `written`.
 *
 * # Safety
 * `out_lo`/`out_hi` must point to `capacity` writable doubles each;
 * `written` must be writable.
 */
enum SpecpolStatus specpol_enclosures(const struct SpecpolSpectrum *spectrum,
                                      double max_half_width,
                                      double *out_lo,
                                      double *out_hi,
                                      uintptr_t capacity,
                                      uintptr_t *written);

/**
 * σ(z): smallest singular value of the pencil z²I − 2zA + B.
 *
 * # Safety
 * `moments` must be a live moments handle and `out` writable.
 */
enum SpecpolStatus specpol_sigma(const struct SpecpolMoments *moments,
                                 double re,
                                 double im,
                                 double *out);

/**
 * Discrete eigenvalues of the ±1-symbol operator perturbed by the constant
 * rank-one term (0, 1 or 2 values). Stores the count in `written`.
 *
 * # Safety
 * `out` must point to `capacity` writable doubles; `written` must be
 * writable; `symbol` must be a live symbol handle.
 */
enum SpecpolStatus specpol_discrete_eigenvalues(const struct SpecpolSymbol *symbol,
                                                double coupling,
                                                double *out,
                                                uintptr_t capacity,
                                                uintptr_t *written);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPECPOL_H */
