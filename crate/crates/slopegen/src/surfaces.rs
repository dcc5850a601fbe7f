//! The three timelike constant slope surface families and their verifier.
//!
//! Each family is generated in three algebraically independent ways:
//!
//! - `direct`: the defining parametrization
//!   `scale(u) * (C(xi) curve + S(xi) curve ∧ curve')`,
//! - `product_form`: the split-quaternion product `Q1 * Q2` with the
//!   full-angle unit timelike quaternion `Q1 = C(xi) - S(xi) curve'` and the
//!   pure quaternion `Q2 = scale(u) curve`,
//! - `homothetic_form`: the homothetic motion `scale(u) * R * curve` where
//!   `R` is the sandwich matrix of the half-angle rotor about `curve'`.
//!
//! `C/S` are `cosh/sinh` for the hyperbolic cases and `cos/sin` for the
//! spherical one. [`SurfaceSpec::verify`] samples a grid and reports how far
//! the three routes drift apart, whether the rotors stay unit, whether the
//! rotation matrices stay Lorentz-orthogonal, and whether the slope ratio of
//! position against normal is constant.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::SplitQuaternion;
use crate::curves::{Ambient, ProfileCurve};
use crate::error::{Error, Result};
use crate::minkowski::{CausalClass, MinkowskiVec3};
use crate::rotation::{case_rotor, rotation_matrix};
use crate::tolerances::{
    DEGENERATE_FRACTION_MAX, FORM_EQUIV_REL, LORENTZ_ORTHO_TOL, NORMAL_DEGENERATE_MIN,
    NORMAL_FD_STEP_REL, PRODUCT_PURITY_TOL, ROTOR_UNIT_TOL, SLOPE_STDDEV_TOL,
};

/// The three surface families.
///
/// Each case fixes the angle function, the homothetic scale, and the curve
/// hypotheses:
///
/// | case | xi(u) | scale(u) | curve |
/// |------|-------|----------|-------|
/// | `TimelikeCone` | `tanh(theta) ln u` | `u cosh(theta)` | spacelike on `H^2` |
/// | `SpacelikeConeSpherical` | `cot(theta) ln u` | `u sin(theta)` | timelike on `S^2_1` |
/// | `SpacelikeConeHyperbolic` | `coth(theta) ln u` | `u sinh(theta)` | spacelike on `S^2_1` |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SlopeCase {
    TimelikeCone,
    SpacelikeConeSpherical,
    SpacelikeConeHyperbolic,
}

impl SlopeCase {
    pub const ALL: [SlopeCase; 3] = [
        SlopeCase::TimelikeCone,
        SlopeCase::SpacelikeConeSpherical,
        SlopeCase::SpacelikeConeHyperbolic,
    ];

    /// Spherical rotation (timelike axis) or hyperbolic rotation (spacelike axis).
    pub fn rotor_is_spherical(self) -> bool {
        matches!(self, SlopeCase::SpacelikeConeSpherical)
    }

    /// Causal character the rotor axis must have.
    pub fn rotor_axis_character(self) -> CausalClass {
        if self.rotor_is_spherical() {
            CausalClass::Timelike
        } else {
            CausalClass::Spacelike
        }
    }

    /// Ambient quadric the profile curve must live on.
    pub fn required_ambient(self) -> Ambient {
        match self {
            SlopeCase::TimelikeCone => Ambient::H2,
            _ => Ambient::S12,
        }
    }

    /// Causal character the profile curve's tangent must have.
    pub fn required_tangent(self) -> CausalClass {
        match self {
            SlopeCase::SpacelikeConeSpherical => CausalClass::Timelike,
            _ => CausalClass::Spacelike,
        }
    }

    /// Sign the position's self-metric must keep over the whole family.
    pub fn position_metric_sign(self) -> f64 {
        match self {
            SlopeCase::TimelikeCone => -1.0,
            _ => 1.0,
        }
    }

    /// Theta ranges: positive for the hyperbolic cases, `(0, pi/2]` for the
    /// spherical one.
    pub fn validate_theta(self, theta: f64) -> Result<()> {
        if !theta.is_finite() || theta <= 0.0 {
            return Err(Error::InvalidTheta(format!(
                "theta must be positive and finite, got {theta}"
            )));
        }
        if self.rotor_is_spherical() && theta > std::f64::consts::FRAC_PI_2 {
            return Err(Error::InvalidTheta(format!(
                "the spherical case needs theta in (0, pi/2], got {theta}"
            )));
        }
        Ok(())
    }

    /// The factor multiplying `ln u` in the angle function.
    pub fn xi_coefficient(self, theta: f64) -> f64 {
        match self {
            SlopeCase::TimelikeCone => theta.tanh(),
            SlopeCase::SpacelikeConeSpherical => theta.cos() / theta.sin(),
            SlopeCase::SpacelikeConeHyperbolic => theta.cosh() / theta.sinh(),
        }
    }

    /// Homothetic scale at parameter `u`.
    pub fn scale(self, theta: f64, u: f64) -> f64 {
        match self {
            SlopeCase::TimelikeCone => u * theta.cosh(),
            SlopeCase::SpacelikeConeSpherical => u * theta.sin(),
            SlopeCase::SpacelikeConeHyperbolic => u * theta.sinh(),
        }
    }

    /// `(C(xi), S(xi))`: hyperbolic or circular pair per case.
    pub fn angle_pair(self, xi: f64) -> (f64, f64) {
        if self.rotor_is_spherical() {
            (xi.cos(), xi.sin())
        } else {
            (xi.cosh(), xi.sinh())
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            SlopeCase::TimelikeCone => "timelike-cone",
            SlopeCase::SpacelikeConeSpherical => "spacelike-cone-spherical",
            SlopeCase::SpacelikeConeHyperbolic => "spacelike-cone-hyperbolic",
        }
    }
}

impl fmt::Display for SlopeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for SlopeCase {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "timelike-cone" => Ok(SlopeCase::TimelikeCone),
            "spacelike-cone-spherical" => Ok(SlopeCase::SpacelikeConeSpherical),
            "spacelike-cone-hyperbolic" => Ok(SlopeCase::SpacelikeConeHyperbolic),
            other => Err(format!(
                "unknown case `{other}` (expected timelike-cone, \
                 spacelike-cone-spherical or spacelike-cone-hyperbolic)"
            )),
        }
    }
}

/// The angle function `xi(case, theta, u)`.
pub fn xi(case: SlopeCase, theta: f64, u: f64) -> Result<f64> {
    case.validate_theta(theta)?;
    if !u.is_finite() || u <= 0.0 {
        return Err(Error::NonpositiveU(u));
    }
    Ok(case.xi_coefficient(theta) * u.ln())
}

/// Debug knob for the verifier: replace the angle-law coefficient of the
/// direct form by another family, leaving the quaternion and homothetic
/// routes on the case's true law. A run with an override set must fail
/// verification (unless the two laws coincide at the given theta), which is
/// how the checker proves it can catch a broken hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum XiOverride {
    Tanh,
    Cot,
    Coth,
    Tan,
}

impl XiOverride {
    pub fn coefficient(self, theta: f64) -> f64 {
        match self {
            XiOverride::Tanh => theta.tanh(),
            XiOverride::Cot => theta.cos() / theta.sin(),
            XiOverride::Coth => theta.cosh() / theta.sinh(),
            XiOverride::Tan => theta.tan(),
        }
    }
}

impl FromStr for XiOverride {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tanh" => Ok(XiOverride::Tanh),
            "cot" => Ok(XiOverride::Cot),
            "coth" => Ok(XiOverride::Coth),
            "tan" => Ok(XiOverride::Tan),
            other => Err(format!("unknown xi override `{other}`")),
        }
    }
}

/// A fully validated surface request: case, angle, curve and sample grid.
#[derive(Debug, Clone)]
pub struct SurfaceSpec {
    case: SlopeCase,
    theta: f64,
    curve: ProfileCurve,
    u_range: (f64, f64),
    v_range: (f64, f64),
    nu: usize,
    nv: usize,
    xi_override: Option<XiOverride>,
}

impl SurfaceSpec {
    pub fn new(
        case: SlopeCase,
        theta: f64,
        curve: ProfileCurve,
        u_range: (f64, f64),
        v_range: (f64, f64),
        nu: usize,
        nv: usize,
    ) -> Result<Self> {
        case.validate_theta(theta)?;
        if curve.ambient() != case.required_ambient()
            || curve.tangent_character() != case.required_tangent()
        {
            return Err(Error::CurveCaseMismatch {
                curve: curve.name().to_string(),
            });
        }
        if !(u_range.0.is_finite() && u_range.1.is_finite() && 0.0 < u_range.0 && u_range.0 < u_range.1)
        {
            return Err(Error::InvalidGrid(format!(
                "need 0 < u_min < u_max, got [{}, {}]",
                u_range.0, u_range.1
            )));
        }
        if !(v_range.0.is_finite() && v_range.1.is_finite() && v_range.0 < v_range.1) {
            return Err(Error::InvalidGrid(format!(
                "need v_min < v_max, got [{}, {}]",
                v_range.0, v_range.1
            )));
        }
        if nu < 2 || nv < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least a 2x2 grid, got {nu}x{nv}"
            )));
        }
        Ok(Self {
            case,
            theta,
            curve,
            u_range,
            v_range,
            nu,
            nv,
            xi_override: None,
        })
    }

    /// Install the verifier's broken-hypothesis knob (see [`XiOverride`]).
    pub fn with_xi_override(mut self, xi_override: XiOverride) -> Self {
        self.xi_override = Some(xi_override);
        self
    }

    pub fn case(&self) -> SlopeCase {
        self.case
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn curve(&self) -> &ProfileCurve {
        &self.curve
    }

    pub fn u_range(&self) -> (f64, f64) {
        self.u_range
    }

    pub fn v_range(&self) -> (f64, f64) {
        self.v_range
    }

    pub fn grid(&self) -> (usize, usize) {
        (self.nu, self.nv)
    }

    pub fn u_samples(&self) -> Vec<f64> {
        linspace(self.u_range.0, self.u_range.1, self.nu)
    }

    pub fn v_samples(&self) -> Vec<f64> {
        linspace(self.v_range.0, self.v_range.1, self.nv)
    }

    /// The case's exact angle function at `u`.
    pub fn xi(&self, u: f64) -> Result<f64> {
        xi(self.case, self.theta, u)
    }

    /// Angle used by the direct form: the case's law unless an override is set.
    fn xi_direct(&self, u: f64) -> Result<f64> {
        if !u.is_finite() || u <= 0.0 {
            return Err(Error::NonpositiveU(u));
        }
        let coeff = match self.xi_override {
            Some(o) => o.coefficient(self.theta),
            None => self.case.xi_coefficient(self.theta),
        };
        Ok(coeff * u.ln())
    }

    /// Homothetic scale at `u`.
    pub fn scale(&self, u: f64) -> f64 {
        self.case.scale(self.theta, u)
    }

    /// The defining parametrization
    /// `scale(u) (C(xi) curve(v) + S(xi) curve(v) ∧ curve'(v))`.
    pub fn direct(&self, u: f64, v: f64) -> Result<MinkowskiVec3> {
        let xi = self.xi_direct(u)?;
        let (c, s) = self.case.angle_pair(xi);
        let f = self.curve.position(v);
        let w = f.lorentz_cross(&self.curve.derivative(v));
        Ok((f.scale(c) + w.scale(s)).scale(self.scale(u)))
    }

    /// Full-angle unit timelike quaternion `C(xi) - S(xi) curve'(v)`.
    pub fn q1(&self, u: f64, v: f64) -> Result<SplitQuaternion> {
        let xi = self.xi(u)?;
        let (c, s) = self.case.angle_pair(xi);
        Ok(SplitQuaternion::from_parts(
            c,
            self.curve.derivative(v).scale(-s),
        ))
    }

    /// Pure quaternion `scale(u) curve(v)`.
    pub fn q2(&self, u: f64, v: f64) -> Result<SplitQuaternion> {
        if !u.is_finite() || u <= 0.0 {
            return Err(Error::NonpositiveU(u));
        }
        Ok(SplitQuaternion::pure(
            self.curve.position(v).scale(self.scale(u)),
        ))
    }

    /// Quaternion-product route: the vector part of `q1 * q2`.
    ///
    /// The scalar part vanishes identically because the curve is
    /// metric-orthogonal to its derivative; the verifier tracks the residual.
    pub fn product_form(&self, u: f64, v: f64) -> Result<MinkowskiVec3> {
        Ok((self.q1(u, v)? * self.q2(u, v)?).vector_part())
    }

    /// Homothetic-motion route: `scale(u) * R(u, v) * curve(v)` with `R` the
    /// sandwich matrix of the half-angle rotor about `curve'(v)`.
    pub fn homothetic_form(&self, u: f64, v: f64) -> Result<MinkowskiVec3> {
        let xi = self.xi(u)?;
        let rotor = case_rotor(self.case, xi, &self.curve.derivative(v))?;
        let m = rotation_matrix(&rotor.q)?;
        Ok(m.mul_vec(&self.curve.position(v)).scale(self.scale(u)))
    }

    /// Unit surface normal from central finite differences of the direct form.
    ///
    /// Steps are `1e-6 * u` in `u` and `1e-6` in `v`, keeping the check
    /// independent of the closed-form partials the three routes share.
    pub fn surface_normal(&self, u: f64, v: f64) -> Result<MinkowskiVec3> {
        let hu = NORMAL_FD_STEP_REL * u;
        let hv = NORMAL_FD_STEP_REL;
        let xu = (self.direct(u + hu, v)? - self.direct(u - hu, v)?).scale(0.5 / hu);
        let xv = (self.direct(u, v + hv)? - self.direct(u, v - hv)?).scale(0.5 / hv);
        let n = xu.lorentz_cross(&xv);
        let vn = n.vnorm();
        if vn < NORMAL_DEGENERATE_MIN {
            return Err(Error::DegenerateNormal { u, v });
        }
        Ok(n.scale(1.0 / vn))
    }

    /// The slope ratio `metric(x, N) / (vnorm(x) vnorm(N))`.
    ///
    /// No inverse trigonometric function is applied: the Lorentzian angle
    /// convention depends on the causal pairing, but constancy of the raw
    /// ratio is exactly the testable property. The ratio is 0-homogeneous in
    /// both arguments.
    pub fn slope_cosine(&self, u: f64, v: f64) -> Result<f64> {
        let x = self.direct(u, v)?;
        if x.vnorm() <= NORMAL_DEGENERATE_MIN {
            return Err(Error::DegeneratePosition { u, v });
        }
        let n = self.surface_normal(u, v)?;
        Ok(slope_ratio(&x, &n))
    }

    /// Run the full invariant suite over the grid.
    ///
    /// Failures are reported, never thrown: every threshold violation clears
    /// `pass` and degenerate-normal points are excluded from the slope
    /// statistics but counted.
    pub fn verify(&self) -> VerificationReport {
        let us = self.u_samples();
        let vs = self.v_samples();
        let metric_sign = self.case.position_metric_sign();

        let rows: Vec<RowEval> = us
            .par_iter()
            .map(|&u| self.eval_row(u, &vs, metric_sign))
            .collect();

        let mut report = VerificationReport {
            max_form_deviation: 0.0,
            slope_cosine_mean: 0.0,
            slope_cosine_stddev: 0.0,
            rotor_unit_max_dev: 0.0,
            lorentz_orthogonality_max_dev: 0.0,
            product_scalar_max_dev: 0.0,
            max_position_norm: 0.0,
            degenerate_normal_count: 0,
            grid: (self.nu, self.nv),
            pass: false,
            notes: Vec::new(),
        };

        let mut slopes: Vec<f64> = Vec::with_capacity(self.nu * self.nv);
        let mut character_ok = true;
        let mut first_error: Option<String> = None;
        for row in rows {
            report.max_form_deviation = report.max_form_deviation.max(row.max_form_dev);
            report.rotor_unit_max_dev = report.rotor_unit_max_dev.max(row.max_rotor_dev);
            report.lorentz_orthogonality_max_dev = report
                .lorentz_orthogonality_max_dev
                .max(row.max_lorentz_dev);
            report.product_scalar_max_dev =
                report.product_scalar_max_dev.max(row.max_scalar_dev);
            report.max_position_norm = report.max_position_norm.max(row.max_pos_norm);
            report.degenerate_normal_count += row.degenerate;
            character_ok &= row.character_ok;
            slopes.extend(row.slopes);
            if first_error.is_none() {
                first_error = row.error;
            }
        }

        let total = (self.nu * self.nv) as f64;
        // Statistics are taken over |slope|: the finite-difference normal's
        // orientation is a parametrization artifact and flips where the
        // v-velocity crosses zero, while the angle against the normal line
        // is what must stay constant.
        let magnitudes: Vec<f64> = slopes.iter().map(|s| s.abs()).collect();
        let (mean, stddev) = mean_stddev(&magnitudes);
        report.slope_cosine_mean = mean;
        report.slope_cosine_stddev = stddev;

        if self.case.rotor_is_spherical()
            && (self.theta - std::f64::consts::FRAC_PI_2).abs() < 1e-15
        {
            report.notes.push(
                "theta = pi/2 makes xi vanish identically; the surface degenerates to the \
                 cone u * curve(v)"
                    .to_string(),
            );
        }
        if !character_ok {
            report.notes.push(format!(
                "position vector left the {} cone on this grid",
                if metric_sign < 0.0 { "timelike" } else { "spacelike" }
            ));
        }
        if report.degenerate_normal_count > 0 {
            report.notes.push(format!(
                "{} grid point(s) with degenerate normals were excluded from the slope \
                 statistics",
                report.degenerate_normal_count
            ));
        }
        if slopes.is_empty() {
            report.notes.push("no non-degenerate slope samples".to_string());
        }
        if let Some(e) = first_error {
            report.notes.push(format!("evaluation error: {e}"));
        }
        if report.slope_cosine_stddev > SLOPE_STDDEV_TOL && report.slope_cosine_mean > 1.0 {
            // the f64 noise floor of the slope pipeline scales with the slope
            // magnitude through the indefinite-norm cancellations; flag the
            // regime where the absolute tolerance sits below that floor
            report.notes.push(format!(
                "slope stddev {:.3e} exceeds the absolute tolerance {SLOPE_STDDEV_TOL:.0e} at a \
                 slope magnitude of {:.3e}; relative scatter is {:.3e}",
                report.slope_cosine_stddev,
                report.slope_cosine_mean,
                report.slope_cosine_stddev / report.slope_cosine_mean
            ));
        }

        let form_tol = FORM_EQUIV_REL * (1.0 + report.max_position_norm);
        report.pass = report.notes.iter().all(|n| !n.starts_with("evaluation error"))
            && report.max_form_deviation <= form_tol
            && report.rotor_unit_max_dev <= ROTOR_UNIT_TOL
            && report.lorentz_orthogonality_max_dev <= LORENTZ_ORTHO_TOL
            && report.product_scalar_max_dev <= PRODUCT_PURITY_TOL
            && !slopes.is_empty()
            && report.slope_cosine_stddev <= SLOPE_STDDEV_TOL
            && (report.degenerate_normal_count as f64) < DEGENERATE_FRACTION_MAX * total
            && character_ok;
        report
    }

    fn eval_row(&self, u: f64, vs: &[f64], metric_sign: f64) -> RowEval {
        let mut row = RowEval::default();
        for &v in vs {
            match self.eval_point(u, v, metric_sign) {
                Ok(p) => {
                    row.max_form_dev = row.max_form_dev.max(p.form_dev);
                    row.max_rotor_dev = row.max_rotor_dev.max(p.rotor_dev);
                    row.max_lorentz_dev = row.max_lorentz_dev.max(p.lorentz_dev);
                    row.max_scalar_dev = row.max_scalar_dev.max(p.scalar_dev);
                    row.max_pos_norm = row.max_pos_norm.max(p.pos_norm);
                    row.character_ok &= p.character_ok;
                    match p.slope {
                        Some(s) => row.slopes.push(s),
                        None => row.degenerate += 1,
                    }
                }
                Err(e) => {
                    if row.error.is_none() {
                        row.error = Some(format!("at (u, v) = ({u}, {v}): {e}"));
                    }
                }
            }
        }
        row
    }

    fn eval_point(&self, u: f64, v: f64, metric_sign: f64) -> Result<PointEval> {
        let direct = self.direct(u, v)?;
        let q1 = self.q1(u, v)?;
        let q2 = self.q2(u, v)?;
        let product_full = q1 * q2;
        let product = product_full.vector_part();

        let rotor = case_rotor(self.case, self.xi(u)?, &self.curve.derivative(v))?;
        let matrix = rotation_matrix(&rotor.q)?;
        let homothetic = matrix.mul_vec(&self.curve.position(v)).scale(self.scale(u));

        let dp = (direct - product).euclid_norm();
        let dh = (direct - homothetic).euclid_norm();
        let ph = (product - homothetic).euclid_norm();

        let slope = match self.slope_cosine(u, v) {
            Ok(s) => Some(s),
            Err(Error::DegenerateNormal { .. }) | Err(Error::DegeneratePosition { .. }) => None,
            Err(e) => return Err(e),
        };

        Ok(PointEval {
            form_dev: dp.max(dh).max(ph),
            rotor_dev: (q1.quadratic_form() - 1.0).abs(),
            lorentz_dev: matrix.lorentz_defect(),
            scalar_dev: product_full.scalar_part().abs(),
            pos_norm: direct.euclid_norm(),
            character_ok: direct.metric_self() * metric_sign > 0.0,
            slope,
        })
    }
}

/// The slope ratio of a position vector against a normal.
pub(crate) fn slope_ratio(x: &MinkowskiVec3, n: &MinkowskiVec3) -> f64 {
    x.metric(n) / (x.vnorm() * n.vnorm())
}

struct PointEval {
    form_dev: f64,
    rotor_dev: f64,
    lorentz_dev: f64,
    scalar_dev: f64,
    pos_norm: f64,
    character_ok: bool,
    slope: Option<f64>,
}

struct RowEval {
    max_form_dev: f64,
    max_rotor_dev: f64,
    max_lorentz_dev: f64,
    max_scalar_dev: f64,
    max_pos_norm: f64,
    character_ok: bool,
    degenerate: usize,
    slopes: Vec<f64>,
    error: Option<String>,
}

impl Default for RowEval {
    fn default() -> Self {
        Self {
            max_form_dev: 0.0,
            max_rotor_dev: 0.0,
            max_lorentz_dev: 0.0,
            max_scalar_dev: 0.0,
            max_pos_norm: 0.0,
            character_ok: true,
            degenerate: 0,
            slopes: Vec::new(),
            error: None,
        }
    }
}

/// Machine-readable outcome of [`SurfaceSpec::verify`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Max pairwise Euclidean deviation among the three forms over the grid.
    pub max_form_deviation: f64,
    /// Mean of the unsigned slope ratio over non-degenerate grid points
    /// (the finite-difference normal's orientation is not meaningful).
    pub slope_cosine_mean: f64,
    /// Population standard deviation of the unsigned slope ratio.
    pub slope_cosine_stddev: f64,
    /// Max `|I_{Q1} - 1|` over the grid.
    pub rotor_unit_max_dev: f64,
    /// Max Lorentz-orthogonality defect of the rotation matrices.
    pub lorentz_orthogonality_max_dev: f64,
    /// Max absolute scalar part of the quaternion product.
    pub product_scalar_max_dev: f64,
    /// Max Euclidean norm of the position over the grid (scales the
    /// form-equivalence threshold).
    pub max_position_norm: f64,
    /// Grid points excluded from the slope statistics.
    pub degenerate_normal_count: usize,
    pub grid: (usize, usize),
    pub pass: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| lo + i as f64 * step).collect()
}

/// Compensated (Kahan) mean and population standard deviation.
fn mean_stddev(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = kahan_sum(values.iter().copied()) / n;
    let var = kahan_sum(values.iter().map(|&x| (x - mean) * (x - mean))) / n;
    (mean, var.max(0.0).sqrt())
}

fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for x in values {
        let y = x - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum
}
