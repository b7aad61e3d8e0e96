#ifndef FLEXRCC_H
#define FLEXRCC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every entry point.
 */
typedef enum FlexrccStatus {
  FLEXRCC_STATUS_OK = 0,
  FLEXRCC_STATUS_NULL_POINTER = 1,
  FLEXRCC_STATUS_INVALID_INPUT = 2,
  FLEXRCC_STATUS_NUMERICAL = 3,
  FLEXRCC_STATUS_IO = 4,
  FLEXRCC_STATUS_PANIC = 5,
} FlexrccStatus;

/**
 * Assembled mechanism with its stiffness and compliance at the reference.
 */
typedef struct FlexrccMechanism FlexrccMechanism;

/**
 * Fitted relaxation model `F(t) = F_ss + (F0 − F_ss) exp(−t/τ)`.
 */
typedef struct FlexrccCreepFit {
  double f0;
  double f_ss;
  /**
   * Infinite when the data show no decay.
   */
  double tau;
  bool tau_identifiable;
  bool spans_time_constant;
  double residual_norm;
  size_t iterations;
} FlexrccCreepFit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *flexrcc_version(void);

/**
 * Message of the last failed call on this thread, or NULL after a success.
 * The pointer stays valid until the next call into the library on this thread.
 */
const char *flexrcc_last_error_message(void);

/**
 * Parses and assembles a mechanism file. On success `*out` owns a handle
 * to be released with [`flexrcc_mechanism_free`].
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a writable pointer.
 */
enum FlexrccStatus flexrcc_mechanism_load(const char *path, struct FlexrccMechanism **out);

/**
 * Loads the bundled four-limb example mechanism.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum FlexrccStatus flexrcc_mechanism_load_small_rcc(struct FlexrccMechanism **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `m` must come from a load function and not have been freed.
 */
void flexrcc_mechanism_free(struct FlexrccMechanism *m);

/**
 * Number of limbs.
 *
 * # Safety
 * `m` must be a live handle and `out` a writable pointer.
 */
enum FlexrccStatus flexrcc_mechanism_limb_count(const struct FlexrccMechanism *m, size_t *out);

/**
 * Total number of elements over all limbs.
 *
 * # Safety
 * `m` must be a live handle and `out` a writable pointer.
 */
enum FlexrccStatus flexrcc_mechanism_element_count(const struct FlexrccMechanism *m, size_t *out);

/**
 * Stiffness matrix at the reference point.
 *
 * # Safety
 * `m` must be a live handle and `out` must hold 36 doubles.
 */
enum FlexrccStatus flexrcc_mechanism_stiffness(const struct FlexrccMechanism *m, double *out);

/**
 * Compliance matrix at the reference point.
 *
 * # Safety
 * `m` must be a live handle and `out` must hold 36 doubles.
 */
enum FlexrccStatus flexrcc_mechanism_compliance(const struct FlexrccMechanism *m, double *out);

/**
 * Height of the z-rotation center from the compliance matrix, mm.
 *
 * # Safety
 * `m` must be a live handle and `out` a writable pointer.
 */
enum FlexrccStatus flexrcc_mechanism_rcc_height(const struct FlexrccMechanism *m, double *out);

/**
 * Intersection height of the two leg axes, mm.
 *
 * # Safety
 * `m` must be a live handle and `out` a writable pointer.
 */
enum FlexrccStatus flexrcc_mechanism_ideal_center(const struct FlexrccMechanism *m, double *out);

/**
 * Height `C33 / C53` of the rotation center of a compliance matrix.
 *
 * # Safety
 * `compliance` must hold 36 doubles and `out` be writable.
 */
enum FlexrccStatus flexrcc_center_of_compliance(const double *compliance, double *out);

/**
 * Solves `K ξ = F` for the twist under a wrench.
 *
 * # Safety
 * `stiffness` must hold 36 doubles, `wrench` 6 and `out` 6 writable doubles.
 */
enum FlexrccStatus flexrcc_static_deflection(const double *stiffness,
                                             const double *wrench,
                                             double *out);

/**
 * Fits the relaxation model to `n` samples of time (s) and force (N).
 *
 * # Safety
 * `times` and `forces` must each hold `n` doubles and `out` be writable.
 */
enum FlexrccStatus flexrcc_creep_fit(const double *times,
                                     const double *forces,
                                     size_t n,
                                     struct FlexrccCreepFit *out);

/**
 * Saint-Venant torsion constant of a rectangle with the given sides, mm⁴.
 *
 * # Safety
 * `out` must be writable.
 */
enum FlexrccStatus flexrcc_torsion_constant(double side_a, double side_b, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLEXRCC_H */
