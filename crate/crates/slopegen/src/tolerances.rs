//! Numerical thresholds used across the kernel.
//!
//! Everything here is pinned; no threshold is tuned at run time. The values
//! fall into two groups: classification guards (scale-aware epsilons that
//! decide causal character and invertibility) and verification tolerances
//! (what the equivalence and orthogonality checks must meet).

/// Base epsilon for causal classification, scaled by the squared Euclidean
/// magnitude of the input so large vectors are not misclassified as lightlike.
pub const CAUSAL_EPS_BASE: f64 = 1e-12;

/// Componentwise tolerance for polar-form reconstruction.
pub const POLAR_RECONSTRUCT_TOL: f64 = 1e-12;

/// Residual scalar part allowed when a sandwich product must be pure.
pub const SANDWICH_PURITY_TOL: f64 = 1e-12;

/// Allowed deviation of a rotor's quadratic form from 1.
pub const ROTOR_UNIT_TOL: f64 = 1e-10;

/// Allowed deviation of a unit axis norm from 1.
pub const AXIS_UNIT_TOL: f64 = 1e-10;

/// Entrywise tolerance for `M^T eta M = eta` and `det M = 1`.
pub const LORENTZ_ORTHO_TOL: f64 = 1e-10;

/// Entrywise tolerance when auditing a transcribed closed-form matrix
/// against the sandwich construction.
pub const MATRIX_AUDIT_TOL: f64 = 1e-10;

/// Relative tolerance for the three-form surface equivalence,
/// applied as `FORM_EQUIV_REL * (1 + max ||x||)`.
pub const FORM_EQUIV_REL: f64 = 1e-9;

/// Largest allowed scalar part of the quaternion-product surface form.
pub const PRODUCT_PURITY_TOL: f64 = 1e-10;

/// Curve invariants (ambient membership, unit speed, orthogonality) must
/// hold to this absolute tolerance on the validation grid.
pub const CURVE_INVARIANT_TOL: f64 = 1e-10;

/// Step for central finite differences of curve derivatives; the standard
/// sweet spot for f64 first derivatives.
pub const CURVE_FD_STEP: f64 = 1e-5;

/// Relative step for the surface-normal finite differences.
pub const NORMAL_FD_STEP_REL: f64 = 1e-6;

/// Below this raw cross-product norm the surface normal is degenerate.
pub const NORMAL_DEGENERATE_MIN: f64 = 1e-9;

/// Largest allowed standard deviation of the slope ratio over a grid.
pub const SLOPE_STDDEV_TOL: f64 = 1e-6;

/// Largest fraction of grid points that may be excluded as degenerate
/// before the verification fails.
pub const DEGENERATE_FRACTION_MAX: f64 = 0.01;
