//! Lorentz rotations from unit timelike split quaternions.
//!
//! The normative construction is the sandwich map `v -> q v q^{-1}`: the
//! columns of [`rotation_matrix`] are the images of the basis vectors under
//! it. The transcribed closed-form matrices ([`closed_form_matrix`]) are
//! evaluated entrywise only to be audited against the sandwich; printed
//! formulas are typo-prone, the sandwich is algebraically forced.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::SplitQuaternion;
use crate::error::{Error, Result};
use crate::minkowski::{CausalClass, MinkowskiVec3};
use crate::surfaces::SlopeCase;
use crate::tolerances::{AXIS_UNIT_TOL, MATRIX_AUDIT_TOL};

/// 3x3 real matrix acting on Minkowski 3-space, row-major, rows and columns
/// indexed (t, a, b). Produced by [`rotation_matrix`], it lies in `SO_1(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 9]", from = "[f64; 9]")]
pub struct LorentzMatrix3 {
    rows: [[f64; 3]; 3],
}

impl From<LorentzMatrix3> for [f64; 9] {
    fn from(m: LorentzMatrix3) -> Self {
        let r = m.rows;
        [
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2],
        ]
    }
}

impl From<[f64; 9]> for LorentzMatrix3 {
    fn from(c: [f64; 9]) -> Self {
        Self::from_rows([[c[0], c[1], c[2]], [c[3], c[4], c[5]], [c[6], c[7], c[8]]])
    }
}

impl LorentzMatrix3 {
    pub const IDENTITY: Self = Self {
        rows: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    pub const fn from_rows(rows: [[f64; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn from_columns(c0: MinkowskiVec3, c1: MinkowskiVec3, c2: MinkowskiVec3) -> Self {
        Self::from_rows([
            [c0.t, c1.t, c2.t],
            [c0.a, c1.a, c2.a],
            [c0.b, c1.b, c2.b],
        ])
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.rows[row][col]
    }

    pub fn rows(&self) -> &[[f64; 3]; 3] {
        &self.rows
    }

    pub fn mul_vec(&self, v: &MinkowskiVec3) -> MinkowskiVec3 {
        let x = [v.t, v.a, v.b];
        let dot = |row: &[f64; 3]| row[0] * x[0] + row[1] * x[1] + row[2] * x[2];
        MinkowskiVec3::new(dot(&self.rows[0]), dot(&self.rows[1]), dot(&self.rows[2]))
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..3).map(|k| self.rows[i][k] * other.rows[k][j]).sum();
            }
        }
        Self::from_rows(out)
    }

    pub fn transpose(&self) -> Self {
        let r = self.rows;
        Self::from_rows([
            [r[0][0], r[1][0], r[2][0]],
            [r[0][1], r[1][1], r[2][1]],
            [r[0][2], r[1][2], r[2][2]],
        ])
    }

    pub fn det(&self) -> f64 {
        let r = self.rows;
        r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
    }

    /// Largest entrywise deviation of `M^T eta M` from `eta`, `eta = diag(-1, 1, 1)`.
    pub fn eta_defect(&self) -> f64 {
        let eta = [-1.0, 1.0, 1.0];
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let gram: f64 = (0..3).map(|k| self.rows[k][i] * eta[k] * self.rows[k][j]).sum();
                let target = if i == j { eta[i] } else { 0.0 };
                worst = worst.max((gram - target).abs());
            }
        }
        worst
    }

    /// `max(eta defect, |det - 1|)`: zero exactly on `SO_1(3)`.
    pub fn lorentz_defect(&self) -> f64 {
        self.eta_defect().max((self.det() - 1.0).abs())
    }

    pub fn is_lorentz(&self, tol: f64) -> bool {
        self.lorentz_defect() <= tol
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.rows[i][j] - other.rows[i][j]).abs());
            }
        }
        worst
    }
}

impl fmt::Display for LorentzMatrix3 {
    /// Three fixed-width lines, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{:>24.16} {:>24.16} {:>24.16}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// Half-angle rotor for a surface case: the unit timelike quaternion whose
/// sandwich rotates by the full angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotor {
    /// The quaternion, `(C(xi/2), -S(xi/2) * axis)` with hyperbolic or
    /// spherical C/S depending on the case.
    pub q: SplitQuaternion,
    /// Surface case the rotor was built for.
    pub case_tag: SlopeCase,
    /// The half-angle argument actually used.
    pub angle: f64,
}

/// Conjugation of an embedded vector: `q v q^{-1}`, returning the vector part.
///
/// Defined for any timelike `q` (scaling cancels between `q` and `q^{-1}`),
/// and the result is always a pure quaternion.
pub fn sandwich(q: &SplitQuaternion, v: &MinkowskiVec3) -> Result<MinkowskiVec3> {
    if q.classify() != CausalClass::Timelike {
        return Err(Error::NotTimelike);
    }
    let inv = q.inverse()?;
    let out = *q * SplitQuaternion::pure(*v) * inv;
    debug_assert!(
        out.scalar_part().abs()
            <= 1e-12 * (1.0 + q.euclid_norm_sq()) * (1.0 + v.euclid_norm()),
        "sandwich produced a non-pure quaternion: scalar = {}",
        out.scalar_part()
    );
    Ok(out.vector_part())
}

/// Matrix of the sandwich action: column `j` is `sandwich(q, e_j)`.
///
/// For unit timelike `q` this is the rotation matrix in `SO_1(3)`; non-unit
/// timelike input yields the same matrix as its normalization.
pub fn rotation_matrix(q: &SplitQuaternion) -> Result<LorentzMatrix3> {
    let c0 = sandwich(q, &MinkowskiVec3::new(1.0, 0.0, 0.0))?;
    let c1 = sandwich(q, &MinkowskiVec3::new(0.0, 1.0, 0.0))?;
    let c2 = sandwich(q, &MinkowskiVec3::new(0.0, 0.0, 1.0))?;
    Ok(LorentzMatrix3::from_columns(c0, c1, c2))
}

fn check_axis(case: SlopeCase, axis: &MinkowskiVec3) -> Result<()> {
    // NaN must fail too, so the comparison is written accept-side
    let dev = (axis.vnorm() - 1.0).abs();
    let unit = dev <= AXIS_UNIT_TOL;
    if !unit {
        return Err(Error::AxisNotUnit(dev));
    }
    if axis.causal_character() != case.rotor_axis_character() {
        return Err(Error::AxisCausalityMismatch);
    }
    Ok(())
}

/// Half-angle rotor for a case: `(cosh(xi/2), -sinh(xi/2) axis)` for the
/// hyperbolic cases, `(cos(xi/2), -sin(xi/2) axis)` for the spherical one.
///
/// The axis must be unit with the causal character the case demands
/// (spacelike for the hyperbolic cases, timelike for the spherical one);
/// the resulting quaternion is unit timelike.
pub fn case_rotor(case: SlopeCase, xi: f64, axis: &MinkowskiVec3) -> Result<Rotor> {
    check_axis(case, axis)?;
    let half = 0.5 * xi;
    let (c, s) = if case.rotor_is_spherical() {
        (half.cos(), half.sin())
    } else {
        (half.cosh(), half.sinh())
    };
    Ok(Rotor {
        q: SplitQuaternion::from_parts(c, axis.scale(-s)),
        case_tag: case,
        angle: half,
    })
}

/// Entrywise evaluation of the transcribed closed-form rotation matrix for a
/// case, as a function of the full angle `xi` and the curve derivative.
///
/// Contract: agrees with `rotation_matrix(case_rotor(case, xi, d).q)` to the
/// audit tolerance; [`audit_closed_form`] measures this with the sandwich
/// construction as ground truth.
pub fn closed_form_matrix(
    case: SlopeCase,
    xi: f64,
    axis_derivative: &MinkowskiVec3,
) -> Result<LorentzMatrix3> {
    check_axis(case, axis_derivative)?;
    let half = 0.5 * xi;
    // cc = C(xi/2)^2, ss = S(xi/2)^2, sf = S(xi) with C/S per case flavor
    let (cc, ss, sf) = if case.rotor_is_spherical() {
        (half.cos().powi(2), half.sin().powi(2), xi.sin())
    } else {
        (half.cosh().powi(2), half.sinh().powi(2), xi.sinh())
    };
    let (d1, d2, d3) = (axis_derivative.t, axis_derivative.a, axis_derivative.b);
    Ok(LorentzMatrix3::from_rows([
        [
            cc + ss * (d1 * d1 + d2 * d2 + d3 * d3),
            -2.0 * ss * d1 * d2 - sf * d3,
            -2.0 * ss * d1 * d3 + sf * d2,
        ],
        [
            2.0 * ss * d1 * d2 - sf * d3,
            cc + ss * (-d1 * d1 - d2 * d2 + d3 * d3),
            -2.0 * ss * d2 * d3 + sf * d1,
        ],
        [
            2.0 * ss * d1 * d3 + sf * d2,
            -2.0 * ss * d2 * d3 - sf * d1,
            cc + ss * (-d1 * d1 + d2 * d2 - d3 * d3),
        ],
    ]))
}

/// Accumulated entrywise comparison of a transcribed matrix against the
/// sandwich-derived one.
#[derive(Debug, Clone, Default)]
pub struct MatrixAudit {
    /// Max absolute deviation seen per entry.
    pub max_dev: [[f64; 3]; 3],
    /// Number of samples recorded.
    pub samples: usize,
}

impl MatrixAudit {
    pub fn record(&mut self, reference: &LorentzMatrix3, truth: &LorentzMatrix3) {
        for i in 0..3 {
            for j in 0..3 {
                let d = (reference.entry(i, j) - truth.entry(i, j)).abs();
                if d > self.max_dev[i][j] {
                    self.max_dev[i][j] = d;
                }
            }
        }
        self.samples += 1;
    }

    /// Entries the sandwich construction confirms (deviation within tolerance).
    pub fn confirmed(&self) -> [[bool; 3]; 3] {
        self.max_dev.map(|row| row.map(|d| d <= MATRIX_AUDIT_TOL))
    }

    /// 1-based (row, col, max deviation) for every entry that disagrees.
    pub fn discrepancies(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if self.max_dev[i][j] > MATRIX_AUDIT_TOL {
                    out.push((i + 1, j + 1, self.max_dev[i][j]));
                }
            }
        }
        out
    }

    pub fn all_confirmed(&self) -> bool {
        self.discrepancies().is_empty()
    }
}

impl fmt::Display for MatrixAudit {
    /// Per-entry table: max deviation and confirmed/DISAGREES, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "entry  max deviation   verdict ({} samples)", self.samples)?;
        for i in 0..3 {
            for j in 0..3 {
                let verdict = if self.max_dev[i][j] <= MATRIX_AUDIT_TOL {
                    "confirmed"
                } else {
                    "DISAGREES"
                };
                writeln!(f, "({},{})  {:>13.6e}   {}", i + 1, j + 1, self.max_dev[i][j], verdict)?;
            }
        }
        Ok(())
    }
}

/// Audit the closed-form matrix of a case against the sandwich construction
/// over a set of `(xi, axis)` samples.
pub fn audit_closed_form(
    case: SlopeCase,
    samples: &[(f64, MinkowskiVec3)],
) -> Result<MatrixAudit> {
    let mut audit = MatrixAudit::default();
    for (xi, axis) in samples {
        let reference = closed_form_matrix(case, *xi, axis)?;
        let truth = rotation_matrix(&case_rotor(case, *xi, axis)?.q)?;
        audit.record(&reference, &truth);
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vec3(t: f64, a: f64, b: f64) -> MinkowskiVec3 {
        MinkowskiVec3::new(t, a, b)
    }

    /// The transcribed general rotation matrix of a unit timelike quaternion,
    /// used purely as a cross-check oracle for the sandwich construction.
    fn rp_closed_form(p: &SplitQuaternion) -> LorentzMatrix3 {
        let (p1, p2, p3, p4) = (p.w, p.x, p.y, p.z);
        LorentzMatrix3::from_rows([
            [
                p1 * p1 + p2 * p2 + p3 * p3 + p4 * p4,
                2.0 * p1 * p4 - 2.0 * p2 * p3,
                -2.0 * p1 * p3 - 2.0 * p2 * p4,
            ],
            [
                2.0 * p2 * p3 + 2.0 * p4 * p1,
                p1 * p1 - p2 * p2 - p3 * p3 + p4 * p4,
                -2.0 * p3 * p4 - 2.0 * p2 * p1,
            ],
            [
                2.0 * p2 * p4 - 2.0 * p3 * p1,
                2.0 * p2 * p1 - 2.0 * p3 * p4,
                p1 * p1 - p2 * p2 + p3 * p3 - p4 * p4,
            ],
        ])
    }

    /// Unit timelike quaternion strategy (rejection-normalize).
    fn arb_unit_timelike() -> impl Strategy<Value = SplitQuaternion> {
        (
            -3.0..3.0f64,
            -2.0..2.0f64,
            -2.0..2.0f64,
            -2.0..2.0f64,
        )
            .prop_filter_map("timelike", |(w, x, y, z)| {
                let q = SplitQuaternion::new(w, x, y, z);
                (q.quadratic_form() > 0.1).then(|| q.normalize().unwrap())
            })
    }

    /// Unit spacelike axis: `(sinh α, cosh α cos β, cosh α sin β)`.
    fn arb_spacelike_axis() -> impl Strategy<Value = MinkowskiVec3> {
        (-1.5..1.5f64, 0.0..std::f64::consts::TAU).prop_map(|(al, be)| {
            vec3(al.sinh(), al.cosh() * be.cos(), al.cosh() * be.sin())
        })
    }

    /// Unit timelike axis: `(cosh α, sinh α cos β, sinh α sin β)`.
    fn arb_timelike_axis() -> impl Strategy<Value = MinkowskiVec3> {
        (-1.5..1.5f64, 0.0..std::f64::consts::TAU).prop_map(|(al, be)| {
            vec3(al.cosh(), al.sinh() * be.cos(), al.sinh() * be.sin())
        })
    }

    #[test]
    fn sandwich_with_identity_is_identity() {
        let v = vec3(1.3, -0.2, 2.7);
        assert_eq!(sandwich(&SplitQuaternion::IDENTITY, &v).unwrap(), v);
    }

    #[test]
    fn sandwich_doubles_the_spherical_angle() {
        // rotor at angle .35 about the timelike axis rotates the j-axis by .7
        let q = SplitQuaternion::new(0.35f64.cos(), 0.35f64.sin(), 0.0, 0.0);
        let out = sandwich(&q, &vec3(0.0, 1.0, 0.0)).unwrap();
        let expected = vec3(0.0, 0.7f64.cos(), 0.7f64.sin());
        assert!((out - expected).euclid_norm() < 1e-15);
    }

    #[test]
    fn sandwich_rejects_non_timelike() {
        let spacelike = SplitQuaternion::J;
        assert!(matches!(
            sandwich(&spacelike, &vec3(1.0, 0.0, 0.0)),
            Err(Error::NotTimelike)
        ));
    }

    #[test]
    fn rotation_matrix_of_identity() {
        let m = rotation_matrix(&SplitQuaternion::IDENTITY).unwrap();
        assert_eq!(m, LorentzMatrix3::IDENTITY);
    }

    #[test]
    fn rotation_matrix_top_left_entry_hyperbolic() {
        // (cosh .5, 0, sinh .5, 0): entry (1,1) = cosh^2 + sinh^2 = cosh 1
        let q = SplitQuaternion::new(0.5f64.cosh(), 0.0, 0.5f64.sinh(), 0.0);
        let m = rotation_matrix(&q).unwrap();
        assert!((m.entry(0, 0) - 1.0f64.cosh()).abs() < 1e-14);
    }

    #[test]
    fn case_rotor_examples() {
        // xi = 0 gives the identity quaternion for any valid axis
        let r = case_rotor(SlopeCase::TimelikeCone, 0.0, &vec3(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(r.q, SplitQuaternion::IDENTITY);

        // case 1, xi = 2 (e.g. 2 ln u at u = e), axis (0,0,1)
        let r = case_rotor(SlopeCase::TimelikeCone, 2.0, &vec3(0.0, 0.0, 1.0)).unwrap();
        let expected = SplitQuaternion::new(1.0f64.cosh(), 0.0, 0.0, -(1.0f64.sinh()));
        assert!(r.q.max_abs_diff(&expected) < 1e-15);
        assert!((r.q.quadratic_form() - 1.0).abs() < 1e-14);

        // case 2, xi = pi/2, timelike axis (1,0,0)
        let r = case_rotor(
            SlopeCase::SpacelikeConeSpherical,
            std::f64::consts::FRAC_PI_2,
            &vec3(1.0, 0.0, 0.0),
        )
        .unwrap();
        let c = std::f64::consts::FRAC_PI_4;
        let expected = SplitQuaternion::new(c.cos(), -c.sin(), 0.0, 0.0);
        assert!(r.q.max_abs_diff(&expected) < 1e-15);
        assert!((r.q.quadratic_form() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn case_rotor_rejects_bad_axes() {
        assert!(matches!(
            case_rotor(SlopeCase::TimelikeCone, 1.0, &vec3(0.0, 0.0, 2.0)),
            Err(Error::AxisNotUnit(_))
        ));
        // timelike axis offered to a hyperbolic case
        assert!(matches!(
            case_rotor(SlopeCase::TimelikeCone, 1.0, &vec3(1.0, 0.0, 0.0)),
            Err(Error::AxisCausalityMismatch)
        ));
        // spacelike axis offered to the spherical case
        assert!(matches!(
            case_rotor(SlopeCase::SpacelikeConeSpherical, 1.0, &vec3(0.0, 1.0, 0.0)),
            Err(Error::AxisCausalityMismatch)
        ));
    }

    #[test]
    fn closed_form_matrix_examples() {
        // xi = 0 is the identity for all cases
        let m = closed_form_matrix(SlopeCase::TimelikeCone, 0.0, &vec3(0.0, 0.0, 1.0)).unwrap();
        assert!(m.max_abs_diff(&LorentzMatrix3::IDENTITY) < 1e-15);

        // hyperbolic case at xi = 1, axis derivative (0,0,1):
        // entry (1,1) = cosh^2(1/2) + sinh^2(1/2) = cosh 1, entry (1,2) = -sinh 1
        let m = closed_form_matrix(SlopeCase::TimelikeCone, 1.0, &vec3(0.0, 0.0, 1.0)).unwrap();
        assert!((m.entry(0, 0) - 1.0f64.cosh()).abs() < 1e-14);
        assert!((m.entry(0, 1) + 1.0f64.sinh()).abs() < 1e-14);
    }

    #[test]
    fn audit_confirms_all_entries_of_the_general_closed_forms() {
        // dense xi sweep with several axes per case; every entry of the three
        // transcribed case matrices agrees with the sandwich
        let spacelike_axes: Vec<MinkowskiVec3> = (0..8)
            .map(|k| {
                let al = -1.2 + 0.3 * k as f64;
                let be = 0.7 * k as f64;
                vec3(al.sinh(), al.cosh() * be.cos(), al.cosh() * be.sin())
            })
            .collect();
        let timelike_axes: Vec<MinkowskiVec3> = (0..8)
            .map(|k| {
                let al = -1.2 + 0.3 * k as f64;
                let be = 0.9 * k as f64;
                vec3(al.cosh(), al.sinh() * be.cos(), al.sinh() * be.sin())
            })
            .collect();
        let xis: Vec<f64> = (-10..=10).map(|k| 0.35 * k as f64).collect();

        for case in [
            SlopeCase::TimelikeCone,
            SlopeCase::SpacelikeConeSpherical,
            SlopeCase::SpacelikeConeHyperbolic,
        ] {
            let axes = if case.rotor_is_spherical() {
                &timelike_axes
            } else {
                &spacelike_axes
            };
            let samples: Vec<(f64, MinkowskiVec3)> = xis
                .iter()
                .flat_map(|&xi| axes.iter().map(move |&ax| (xi, ax)))
                .collect();
            let audit = audit_closed_form(case, &samples).unwrap();
            assert!(
                audit.all_confirmed(),
                "case {case:?} disagreements: {:?}",
                audit.discrepancies()
            );
        }
    }

    #[test]
    fn spacelike_axis_gives_hyperbolic_growth() {
        // trace = 1 + 2 cosh(xi) grows monotonically in |xi|
        let axis = vec3(0.0, 0.6f64.sinh() / 0.6f64.sinh(), 0.0); // (0,1,0)
        let mut last = -f64::INFINITY;
        for k in 0..6 {
            let xi = 0.8 * k as f64;
            let m = rotation_matrix(&case_rotor(SlopeCase::TimelikeCone, xi, &axis).unwrap().q)
                .unwrap();
            let trace = m.entry(0, 0) + m.entry(1, 1) + m.entry(2, 2);
            assert!(trace > last);
            last = trace;
        }
    }

    #[test]
    fn timelike_axis_restriction_has_unit_spectral_radius() {
        // about a timelike axis the rotation is spherical: the block on the
        // axis-orthogonal (spacelike) plane has eigenvalues of modulus 1
        let alpha = 0.8f64;
        let axis = vec3(alpha.cosh(), 0.0, alpha.sinh());
        // orthonormal spacelike complement of the axis
        let e = vec3(alpha.sinh(), 0.0, alpha.cosh());
        let f = vec3(0.0, 1.0, 0.0);
        assert!(axis.metric(&e).abs() < 1e-15 && axis.metric(&f).abs() < 1e-15);

        for k in 1..8 {
            let xi = 0.5 * k as f64;
            let m = rotation_matrix(
                &case_rotor(SlopeCase::SpacelikeConeSpherical, xi, &axis).unwrap().q,
            )
            .unwrap();
            let (me, mf) = (m.mul_vec(&e), m.mul_vec(&f));
            // components in the {e, f} basis (both unit spacelike)
            let bm = [
                [me.metric(&e), mf.metric(&e)],
                [me.metric(&f), mf.metric(&f)],
            ];
            let tr = bm[0][0] + bm[1][1];
            let det = bm[0][0] * bm[1][1] - bm[0][1] * bm[1][0];
            let disc = tr * tr - 4.0 * det;
            let radius = if disc < 0.0 {
                det.abs().sqrt()
            } else {
                ((tr.abs() + disc.sqrt()) / 2.0).abs()
            };
            assert!(
                (radius - 1.0).abs() <= 1e-10,
                "xi = {xi}: spectral radius {radius}"
            );
        }
    }

    #[test]
    fn matrix_json_is_a_nine_array() {
        let m = LorentzMatrix3::IDENTITY;
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[1.0,0.0,0.0,0.0,1.0,0.0,0.0,0.0,1.0]");
        let back: LorentzMatrix3 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    proptest! {
        #[test]
        fn sandwich_preserves_the_metric(
            q in arb_unit_timelike(),
            t in -5.0..5.0f64, a in -5.0..5.0f64, b in -5.0..5.0f64,
        ) {
            let v = vec3(t, a, b);
            let w = sandwich(&q, &v).unwrap();
            prop_assert!((w.metric_self() - v.metric_self()).abs()
                <= 1e-10 * (1.0 + v.euclid_norm_sq()));
        }

        #[test]
        fn matrix_equals_sandwich_on_random_vectors(
            q in arb_unit_timelike(),
            t in -5.0..5.0f64, a in -5.0..5.0f64, b in -5.0..5.0f64,
        ) {
            let v = vec3(t, a, b);
            let m = rotation_matrix(&q).unwrap();
            let via_matrix = m.mul_vec(&v);
            let via_sandwich = sandwich(&q, &v).unwrap();
            prop_assert!((via_matrix - via_sandwich).euclid_norm()
                <= 1e-12 * (1.0 + v.euclid_norm()));
        }

        #[test]
        fn matrix_agrees_with_transcribed_general_form(q in arb_unit_timelike()) {
            let m = rotation_matrix(&q).unwrap();
            prop_assert!(m.max_abs_diff(&rp_closed_form(&q)) <= 1e-12);
        }

        #[test]
        fn matrix_is_lorentz_orthogonal(q in arb_unit_timelike()) {
            let m = rotation_matrix(&q).unwrap();
            prop_assert!(m.eta_defect() <= 1e-10);
            prop_assert!((m.det() - 1.0).abs() <= 1e-10);
        }

        #[test]
        fn rotation_is_a_homomorphism(p in arb_unit_timelike(), q in arb_unit_timelike()) {
            // entries grow with the squared component size, so the 1e-10
            // bound is relative to the matrix magnitude
            let lhs = rotation_matrix(&(p * q)).unwrap();
            let rhs = rotation_matrix(&p).unwrap().mul_mat(&rotation_matrix(&q).unwrap());
            let scale = 1.0 + lhs.rows().iter().flatten().fold(0.0f64, |m, e| m.max(e.abs()));
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10 * scale);
        }

        #[test]
        fn rotor_fixes_its_axis_hyperbolic(axis in arb_spacelike_axis(), xi in -3.0..3.0f64) {
            let r = case_rotor(SlopeCase::TimelikeCone, xi, &axis).unwrap();
            let out = sandwich(&r.q, &axis).unwrap();
            prop_assert!((out - axis).euclid_norm() <= 1e-10);
        }

        #[test]
        fn rotor_fixes_its_axis_spherical(axis in arb_timelike_axis(), xi in -3.0..3.0f64) {
            let r = case_rotor(SlopeCase::SpacelikeConeSpherical, xi, &axis).unwrap();
            let out = sandwich(&r.q, &axis).unwrap();
            prop_assert!((out - axis).euclid_norm() <= 1e-10);
        }

        #[test]
        fn half_angle_rotor_matches_full_angle_closed_form(
            axis in arb_spacelike_axis(),
            xi in -3.0..3.0f64,
        ) {
            // the rotor stores xi/2; its sandwich realizes the rotation by xi
            let r = case_rotor(SlopeCase::TimelikeCone, xi, &axis).unwrap();
            prop_assert!((r.angle - 0.5 * xi).abs() <= 1e-15);
            let m = rotation_matrix(&r.q).unwrap();
            let cf = closed_form_matrix(SlopeCase::TimelikeCone, xi, &axis).unwrap();
            prop_assert!(m.max_abs_diff(&cf) <= 1e-10);
        }

        #[test]
        fn closed_form_agrees_for_the_spherical_case(
            axis in arb_timelike_axis(),
            xi in -3.0..3.0f64,
        ) {
            let r = case_rotor(SlopeCase::SpacelikeConeSpherical, xi, &axis).unwrap();
            let m = rotation_matrix(&r.q).unwrap();
            let cf = closed_form_matrix(SlopeCase::SpacelikeConeSpherical, xi, &axis).unwrap();
            prop_assert!(m.max_abs_diff(&cf) <= 1e-10);
        }
    }
}
