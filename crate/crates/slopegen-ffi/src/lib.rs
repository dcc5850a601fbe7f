//! C ABI for the slopegen geometry kernel.
//!
//! Scalar data crosses the boundary as plain `double` arrays: split
//! quaternions as `[w, x, y, z]`, Minkowski vectors as `[t, a, b]` and
//! rotation matrices as row-major `[9]`. Profile curves and surface
//! requests live behind opaque handles created and destroyed here. Every
//! function returns a [`SlopeStatus`]; outputs are written only on
//! `SLOPE_STATUS_OK`.
//!
//! The generated header is `include/slopegen.h`, refreshed by the build
//! script through cbindgen.

use std::collections::BTreeMap;
use std::ffi::{c_char, CStr};

use slopegen::curves::ProfileCurve;
use slopegen::error::Error;
use slopegen::minkowski::{CausalClass, MinkowskiVec3};
use slopegen::rotation::{rotation_matrix, sandwich};
use slopegen::algebra::SplitQuaternion;
use slopegen::surfaces::{SlopeCase, SurfaceSpec};

/// Result of every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlopeStatus {
    Ok = 0,
    /// A required pointer was null.
    NullPointer = 1,
    /// Bad name, parameter, angle, range or case/curve combination.
    InvalidArgument = 2,
    /// The quaternion must be timelike for this operation.
    NotTimelike = 3,
    /// Lightlike quaternions have no inverse.
    NotInvertible = 4,
    /// Degenerate norm, normal or position at the requested sample.
    Degenerate = 5,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 6,
}

/// Surface family selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlopeCaseId {
    TimelikeCone = 0,
    SpacelikeConeSpherical = 1,
    SpacelikeConeHyperbolic = 2,
}

impl From<SlopeCaseId> for SlopeCase {
    fn from(c: SlopeCaseId) -> Self {
        match c {
            SlopeCaseId::TimelikeCone => SlopeCase::TimelikeCone,
            SlopeCaseId::SpacelikeConeSpherical => SlopeCase::SpacelikeConeSpherical,
            SlopeCaseId::SpacelikeConeHyperbolic => SlopeCase::SpacelikeConeHyperbolic,
        }
    }
}

/// Causal character of a vector or quaternion.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlopeCausalClass {
    Spacelike = 0,
    Timelike = 1,
    Lightlike = 2,
}

impl From<CausalClass> for SlopeCausalClass {
    fn from(c: CausalClass) -> Self {
        match c {
            CausalClass::Spacelike => SlopeCausalClass::Spacelike,
            CausalClass::Timelike => SlopeCausalClass::Timelike,
            CausalClass::Lightlike => SlopeCausalClass::Lightlike,
        }
    }
}

/// Opaque profile curve handle.
pub struct SlopeCurve(ProfileCurve);

/// Opaque surface request handle.
pub struct SlopeSpec(SurfaceSpec);

/// Verification outcome, mirroring the library's report numbers.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SlopeVerification {
    pub max_form_deviation: f64,
    pub slope_cosine_mean: f64,
    pub slope_cosine_stddev: f64,
    pub rotor_unit_max_dev: f64,
    pub lorentz_orthogonality_max_dev: f64,
    pub product_scalar_max_dev: f64,
    pub max_position_norm: f64,
    pub degenerate_normal_count: usize,
    pub grid_nu: usize,
    pub grid_nv: usize,
    /// 1 if every threshold held, 0 otherwise.
    pub pass: u8,
}

fn status_for(err: &Error) -> SlopeStatus {
    match err {
        Error::NotInvertible => SlopeStatus::NotInvertible,
        Error::NotTimelike => SlopeStatus::NotTimelike,
        Error::DegenerateNorm
        | Error::DegenerateNormal { .. }
        | Error::DegeneratePosition { .. }
        | Error::NotDecomposable(_) => SlopeStatus::Degenerate,
        _ => SlopeStatus::InvalidArgument,
    }
}

unsafe fn read_quat(p: *const f64) -> SplitQuaternion {
    SplitQuaternion::new(*p, *p.add(1), *p.add(2), *p.add(3))
}

unsafe fn write_quat(out: *mut f64, q: &SplitQuaternion) {
    *out = q.w;
    *out.add(1) = q.x;
    *out.add(2) = q.y;
    *out.add(3) = q.z;
}

unsafe fn read_vec(p: *const f64) -> MinkowskiVec3 {
    MinkowskiVec3::new(*p, *p.add(1), *p.add(2))
}

unsafe fn write_vec(out: *mut f64, v: &MinkowskiVec3) {
    *out = v.t;
    *out.add(1) = v.a;
    *out.add(2) = v.b;
}

/// Split-quaternion product `a * b`.
///
/// # Safety
/// `a` and `b` must point to 4 doubles, `out` to writable space for 4.
#[no_mangle]
pub unsafe extern "C" fn slope_quat_multiply(
    a: *const f64,
    b: *const f64,
    out: *mut f64,
) -> SlopeStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    let product = read_quat(a) * read_quat(b);
    write_quat(out, &product);
    SlopeStatus::Ok
}

/// Conjugate of a split quaternion (vector part negated).
///
/// # Safety
/// `a` must point to 4 doubles, `out` to writable space for 4.
#[no_mangle]
pub unsafe extern "C" fn slope_quat_conjugate(a: *const f64, out: *mut f64) -> SlopeStatus {
    if a.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    write_quat(out, &read_quat(a).conjugate());
    SlopeStatus::Ok
}

/// The indefinite quadratic form `w^2 + x^2 - y^2 - z^2`.
///
/// # Safety
/// `a` must point to 4 doubles, `out` to one writable double.
#[no_mangle]
pub unsafe extern "C" fn slope_quat_quadratic_form(a: *const f64, out: *mut f64) -> SlopeStatus {
    if a.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    *out = read_quat(a).quadratic_form();
    SlopeStatus::Ok
}

/// Causal classification by the sign of the quadratic form.
///
/// # Safety
/// `a` must point to 4 doubles, `out` to one writable `SlopeCausalClass`.
#[no_mangle]
pub unsafe extern "C" fn slope_quat_classify(
    a: *const f64,
    out: *mut SlopeCausalClass,
) -> SlopeStatus {
    if a.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    *out = read_quat(a).classify().into();
    SlopeStatus::Ok
}

/// Multiplicative inverse; fails with `SLOPE_STATUS_NOT_INVERTIBLE` on
/// lightlike input.
///
/// # Safety
/// `a` must point to 4 doubles, `out` to writable space for 4.
#[no_mangle]
pub unsafe extern "C" fn slope_quat_inverse(a: *const f64, out: *mut f64) -> SlopeStatus {
    if a.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    match read_quat(a).inverse() {
        Ok(inv) => {
            write_quat(out, &inv);
            SlopeStatus::Ok
        }
        Err(e) => status_for(&e),
    }
}

/// Conjugation `q v q^{-1}` of a Minkowski vector by a timelike quaternion.
///
/// # Safety
/// `q` must point to 4 doubles, `v` to 3, `out` to writable space for 3.
#[no_mangle]
pub unsafe extern "C" fn slope_sandwich(
    q: *const f64,
    v: *const f64,
    out: *mut f64,
) -> SlopeStatus {
    if q.is_null() || v.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    match sandwich(&read_quat(q), &read_vec(v)) {
        Ok(w) => {
            write_vec(out, &w);
            SlopeStatus::Ok
        }
        Err(e) => status_for(&e),
    }
}

/// Row-major 3x3 rotation matrix of a timelike quaternion's sandwich action.
///
/// # Safety
/// `q` must point to 4 doubles, `out` to writable space for 9.
#[no_mangle]
pub unsafe extern "C" fn slope_rotation_matrix(q: *const f64, out: *mut f64) -> SlopeStatus {
    if q.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    match rotation_matrix(&read_quat(q)) {
        Ok(m) => {
            let flat: [f64; 9] = m.into();
            for (i, e) in flat.iter().enumerate() {
                *out.add(i) = *e;
            }
            SlopeStatus::Ok
        }
        Err(e) => status_for(&e),
    }
}

/// Create a profile curve by registry name with optional named parameters.
/// The handle must be released with [`slope_curve_free`].
///
/// # Safety
/// `name` must be a NUL-terminated string. `param_names` and `param_values`
/// must both point to `n_params` entries (or be null when `n_params` is 0);
/// each name must be NUL-terminated. `out` must be a writable handle slot.
#[no_mangle]
pub unsafe extern "C" fn slope_curve_new(
    name: *const c_char,
    param_names: *const *const c_char,
    param_values: *const f64,
    n_params: usize,
    out: *mut *mut SlopeCurve,
) -> SlopeStatus {
    if name.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    if n_params > 0 && (param_names.is_null() || param_values.is_null()) {
        return SlopeStatus::NullPointer;
    }
    let name = match CStr::from_ptr(name).to_str() {
        Ok(s) => s,
        Err(_) => return SlopeStatus::InvalidUtf8,
    };
    let mut params = BTreeMap::new();
    for i in 0..n_params {
        let pname = *param_names.add(i);
        if pname.is_null() {
            return SlopeStatus::NullPointer;
        }
        let pname = match CStr::from_ptr(pname).to_str() {
            Ok(s) => s,
            Err(_) => return SlopeStatus::InvalidUtf8,
        };
        params.insert(pname.to_string(), *param_values.add(i));
    }
    match ProfileCurve::builtin(name, &params) {
        Ok(curve) => {
            *out = Box::into_raw(Box::new(SlopeCurve(curve)));
            SlopeStatus::Ok
        }
        Err(e) => status_for(&e),
    }
}

/// Release a curve handle. Null is ignored.
///
/// # Safety
/// `curve` must be a handle from [`slope_curve_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn slope_curve_free(curve: *mut SlopeCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// Evaluate the curve position at `v` into `[t, a, b]`.
///
/// # Safety
/// `curve` must be a live handle; `out` must hold 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn slope_curve_position(
    curve: *const SlopeCurve,
    v: f64,
    out: *mut f64,
) -> SlopeStatus {
    if curve.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    write_vec(out, &(*curve).0.position(v));
    SlopeStatus::Ok
}

/// Evaluate the curve derivative at `v` into `[t, a, b]`.
///
/// # Safety
/// `curve` must be a live handle; `out` must hold 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn slope_curve_derivative(
    curve: *const SlopeCurve,
    v: f64,
    out: *mut f64,
) -> SlopeStatus {
    if curve.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    write_vec(out, &(*curve).0.derivative(v));
    SlopeStatus::Ok
}

/// Build a validated surface request. The curve is copied into the handle;
/// the handle must be released with [`slope_spec_free`].
///
/// # Safety
/// `curve` must be a live handle; `out` must be a writable handle slot.
#[no_mangle]
pub unsafe extern "C" fn slope_spec_new(
    case: SlopeCaseId,
    theta: f64,
    curve: *const SlopeCurve,
    u_min: f64,
    u_max: f64,
    v_min: f64,
    v_max: f64,
    nu: usize,
    nv: usize,
    out: *mut *mut SlopeSpec,
) -> SlopeStatus {
    if curve.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    match SurfaceSpec::new(
        case.into(),
        theta,
        (*curve).0.clone(),
        (u_min, u_max),
        (v_min, v_max),
        nu,
        nv,
    ) {
        Ok(spec) => {
            *out = Box::into_raw(Box::new(SlopeSpec(spec)));
            SlopeStatus::Ok
        }
        Err(e) => status_for(&e),
    }
}

/// Release a spec handle. Null is ignored.
///
/// # Safety
/// `spec` must be a handle from [`slope_spec_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn slope_spec_free(spec: *mut SlopeSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

unsafe fn eval_form(
    spec: *const SlopeSpec,
    u: f64,
    v: f64,
    out: *mut f64,
    f: impl Fn(&SurfaceSpec, f64, f64) -> Result<MinkowskiVec3, Error>,
) -> SlopeStatus {
    if spec.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    match f(&(*spec).0, u, v) {
        Ok(p) => {
            write_vec(out, &p);
            SlopeStatus::Ok
        }
        Err(e) => status_for(&e),
    }
}

/// Direct parametrization at `(u, v)` into `[t, a, b]`.
///
/// # Safety
/// `spec` must be a live handle; `out` must hold 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn slope_spec_direct(
    spec: *const SlopeSpec,
    u: f64,
    v: f64,
    out: *mut f64,
) -> SlopeStatus {
    eval_form(spec, u, v, out, |s, u, v| s.direct(u, v))
}

/// Quaternion-product parametrization at `(u, v)` into `[t, a, b]`.
///
/// # Safety
/// `spec` must be a live handle; `out` must hold 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn slope_spec_product(
    spec: *const SlopeSpec,
    u: f64,
    v: f64,
    out: *mut f64,
) -> SlopeStatus {
    eval_form(spec, u, v, out, |s, u, v| s.product_form(u, v))
}

/// Homothetic-motion parametrization at `(u, v)` into `[t, a, b]`.
///
/// # Safety
/// `spec` must be a live handle; `out` must hold 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn slope_spec_homothetic(
    spec: *const SlopeSpec,
    u: f64,
    v: f64,
    out: *mut f64,
) -> SlopeStatus {
    eval_form(spec, u, v, out, |s, u, v| s.homothetic_form(u, v))
}

/// Slope ratio of position against the finite-difference normal at `(u, v)`.
///
/// # Safety
/// `spec` must be a live handle; `out` must hold one writable double.
#[no_mangle]
pub unsafe extern "C" fn slope_spec_slope_cosine(
    spec: *const SlopeSpec,
    u: f64,
    v: f64,
    out: *mut f64,
) -> SlopeStatus {
    if spec.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    match (*spec).0.slope_cosine(u, v) {
        Ok(s) => {
            *out = s;
            SlopeStatus::Ok
        }
        Err(e) => status_for(&e),
    }
}

/// Run the grid verification suite and fill `out` with the report numbers.
///
/// # Safety
/// `spec` must be a live handle; `out` must point to a writable
/// `SlopeVerification`.
#[no_mangle]
pub unsafe extern "C" fn slope_spec_verify(
    spec: *const SlopeSpec,
    out: *mut SlopeVerification,
) -> SlopeStatus {
    if spec.is_null() || out.is_null() {
        return SlopeStatus::NullPointer;
    }
    let report = (*spec).0.verify();
    *out = SlopeVerification {
        max_form_deviation: report.max_form_deviation,
        slope_cosine_mean: report.slope_cosine_mean,
        slope_cosine_stddev: report.slope_cosine_stddev,
        rotor_unit_max_dev: report.rotor_unit_max_dev,
        lorentz_orthogonality_max_dev: report.lorentz_orthogonality_max_dev,
        product_scalar_max_dev: report.product_scalar_max_dev,
        max_position_norm: report.max_position_norm,
        degenerate_normal_count: report.degenerate_normal_count,
        grid_nu: report.grid.0,
        grid_nv: report.grid.1,
        pass: u8::from(report.pass),
    };
    SlopeStatus::Ok
}
