#ifndef SLOPEGEN_H
#define SLOPEGEN_H

/* Generated by cbindgen from slopegen-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Surface family selector.
typedef enum SlopeCaseId {
  SLOPE_CASE_ID_TIMELIKE_CONE = 0,
  SLOPE_CASE_ID_SPACELIKE_CONE_SPHERICAL = 1,
  SLOPE_CASE_ID_SPACELIKE_CONE_HYPERBOLIC = 2,
} SlopeCaseId;

// Causal character of a vector or quaternion.
typedef enum SlopeCausalClass {
  SLOPE_CAUSAL_CLASS_SPACELIKE = 0,
  SLOPE_CAUSAL_CLASS_TIMELIKE = 1,
  SLOPE_CAUSAL_CLASS_LIGHTLIKE = 2,
} SlopeCausalClass;

// Result of every FFI call.
typedef enum SlopeStatus {
  SLOPE_STATUS_OK = 0,
  // A required pointer was null.
  SLOPE_STATUS_NULL_POINTER = 1,
  // Bad name, parameter, angle, range or case/curve combination.
  SLOPE_STATUS_INVALID_ARGUMENT = 2,
  // The quaternion must be timelike for this operation.
  SLOPE_STATUS_NOT_TIMELIKE = 3,
  // Lightlike quaternions have no inverse.
  SLOPE_STATUS_NOT_INVERTIBLE = 4,
  // Degenerate norm, normal or position at the requested sample.
  SLOPE_STATUS_DEGENERATE = 5,
  // A string argument was not valid UTF-8.
  SLOPE_STATUS_INVALID_UTF8 = 6,
} SlopeStatus;

// Opaque profile curve handle.
typedef struct SlopeCurve SlopeCurve;

// Opaque surface request handle.
typedef struct SlopeSpec SlopeSpec;

// Verification outcome, mirroring the library's report numbers.
typedef struct SlopeVerification {
  double max_form_deviation;
  double slope_cosine_mean;
  double slope_cosine_stddev;
  double rotor_unit_max_dev;
  double lorentz_orthogonality_max_dev;
  double product_scalar_max_dev;
  double max_position_norm;
  size_t degenerate_normal_count;
  size_t grid_nu;
  size_t grid_nv;
  // 1 if every threshold held, 0 otherwise.
  uint8_t pass;
} SlopeVerification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Split-quaternion product `a * b`.
//
// # Safety
// `a` and `b` must point to 4 doubles, `out` to writable space for 4.
enum SlopeStatus slope_quat_multiply(const double *a, const double *b, double *out);

// Conjugate of a split quaternion (vector part negated).
//
// # Safety
// `a` must point to 4 doubles, `out` to writable space for 4.
enum SlopeStatus slope_quat_conjugate(const double *a, double *out);

// The indefinite quadratic form `w^2 + x^2 - y^2 - z^2`.
//
// # Safety
// `a` must point to 4 doubles, `out` to one writable double.
enum SlopeStatus slope_quat_quadratic_form(const double *a, double *out);

// Causal classification by the sign of the quadratic form.
//
// # Safety
// `a` must point to 4 doubles, `out` to one writable `SlopeCausalClass`.
enum SlopeStatus slope_quat_classify(const double *a, enum SlopeCausalClass *out);

// Multiplicative inverse; fails with `SLOPE_STATUS_NOT_INVERTIBLE` on
// lightlike input.
//
// # Safety
// `a` must point to 4 doubles, `out` to writable space for 4.
enum SlopeStatus slope_quat_inverse(const double *a, double *out);

// Conjugation `q v q^{-1}` of a Minkowski vector by a timelike quaternion.
//
// # Safety
// `q` must point to 4 doubles, `v` to 3, `out` to writable space for 3.
enum SlopeStatus slope_sandwich(const double *q, const double *v, double *out);

// Row-major 3x3 rotation matrix of a timelike quaternion's sandwich action.
//
// # Safety
// `q` must point to 4 doubles, `out` to writable space for 9.
enum SlopeStatus slope_rotation_matrix(const double *q, double *out);

// Create a profile curve by registry name with optional named parameters.
// The handle must be released with [`slope_curve_free`].
//
// # Safety
// `name` must be a NUL-terminated string. `param_names` and `param_values`
// must both point to `n_params` entries (or be null when `n_params` is 0);
// each name must be NUL-terminated. `out` must be a writable handle slot.
enum SlopeStatus slope_curve_new(const char *name,
                                 const char *const *param_names,
                                 const double *param_values,
                                 size_t n_params,
                                 struct SlopeCurve **out);

// Release a curve handle. Null is ignored.
//
// # Safety
// `curve` must be a handle from [`slope_curve_new`], not yet freed.
void slope_curve_free(struct SlopeCurve *curve);

// Evaluate the curve position at `v` into `[t, a, b]`.
//
// # Safety
// `curve` must be a live handle; `out` must hold 3 writable doubles.
enum SlopeStatus slope_curve_position(const struct SlopeCurve *curve, double v, double *out);

// Evaluate the curve derivative at `v` into `[t, a, b]`.
//
// # Safety
// `curve` must be a live handle; `out` must hold 3 writable doubles.
enum SlopeStatus slope_curve_derivative(const struct SlopeCurve *curve, double v, double *out);

// Build a validated surface request. The curve is copied into the handle;
// the handle must be released with [`slope_spec_free`].
//
// # Safety
// `curve` must be a live handle; `out` must be a writable handle slot.
enum SlopeStatus slope_spec_new(enum SlopeCaseId case_,
                                double theta,
                                const struct SlopeCurve *curve,
                                double u_min,
                                double u_max,
                                double v_min,
                                double v_max,
                                size_t nu,
                                size_t nv,
                                struct SlopeSpec **out);

// Release a spec handle. Null is ignored.
//
// # Safety
// `spec` must be a handle from [`slope_spec_new`], not yet freed.
void slope_spec_free(struct SlopeSpec *spec);

// Direct parametrization at `(u, v)` into `[t, a, b]`.
//
// # Safety
// `spec` must be a live handle; `out` must hold 3 writable doubles.
enum SlopeStatus slope_spec_direct(const struct SlopeSpec *spec, double u, double v, double *out);

// Quaternion-product parametrization at `(u, v)` into `[t, a, b]`.
//
// # Safety
// `spec` must be a live handle; `out` must hold 3 writable doubles.
enum SlopeStatus slope_spec_product(const struct SlopeSpec *spec, double u, double v, double *out);

// Homothetic-motion parametrization at `(u, v)` into `[t, a, b]`.
//
// # Safety
// `spec` must be a live handle; `out` must hold 3 writable doubles.
enum SlopeStatus slope_spec_homothetic(const struct SlopeSpec *spec,
                                       double u,
                                       double v,
                                       double *out);

// Slope ratio of position against the finite-difference normal at `(u, v)`.
//
// # Safety
// `spec` must be a live handle; `out` must hold one writable double.
enum SlopeStatus slope_spec_slope_cosine(const struct SlopeSpec *spec,
                                         double u,
                                         double v,
                                         double *out);

// Run the grid verification suite and fill `out` with the report numbers.
//
// # Safety
// `spec` must be a live handle; `out` must point to a writable
// `SlopeVerification`.
enum SlopeStatus slope_spec_verify(const struct SlopeSpec *spec, struct SlopeVerification *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SLOPEGEN_H */
