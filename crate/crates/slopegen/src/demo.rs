//! The three built-in example surfaces and their transcribed reference data.
//!
//! Each surface case ships with one worked example: the `H^2` hyperbola at
//! theta = 7, the `S^2_1` timelike hyperbola at theta = pi/4, and the `S^2_1`
//! circle at theta = 7. Every example carries a transcribed closed-form
//! position and rotation matrix, kept verbatim (misprints included) as audit
//! fixtures. The hyperbolic transcriptions round their angle coefficient
//! (`tanh 7` and `coth 7`) to 1, so position comparisons against them carry a
//! ~2e-6 relative gap away from `u = 1`; the spherical one is exact. The
//! transcribed matrix of the spherical example is internally inconsistent in
//! five entries — [`reference_matrix_audit`] measures this against the
//! sandwich construction instead of guessing the intended form.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::curves::ProfileCurve;
use crate::error::Result;
use crate::mesh::{build_mesh, write_obj, SurfaceForm};
use crate::minkowski::MinkowskiVec3;
use crate::rotation::{case_rotor, rotation_matrix, LorentzMatrix3, MatrixAudit};
use crate::surfaces::{SlopeCase, SurfaceSpec, VerificationReport};

/// Default export grid for [`run_all`].
pub const DEFAULT_U_RANGE: (f64, f64) = (0.25, 3.0);
pub const DEFAULT_V_RANGE: (f64, f64) = (-2.0, 2.0);
pub const DEFAULT_STEPS: usize = 96;

/// Theta of the built-in example for a case.
pub fn example_theta(case: SlopeCase) -> f64 {
    match case {
        SlopeCase::TimelikeCone => 7.0,
        SlopeCase::SpacelikeConeSpherical => std::f64::consts::FRAC_PI_4,
        SlopeCase::SpacelikeConeHyperbolic => 7.0,
    }
}

/// Profile curve of the built-in example for a case.
pub fn example_curve(case: SlopeCase) -> ProfileCurve {
    let name = match case {
        SlopeCase::TimelikeCone => "h2-hyperbola",
        SlopeCase::SpacelikeConeSpherical => "s12-timelike-hyperbola",
        SlopeCase::SpacelikeConeHyperbolic => "s12-circle",
    };
    ProfileCurve::builtin(name, &BTreeMap::new()).expect("builtin example curves are valid")
}

/// The example surface of a case on a caller-chosen grid.
pub fn example_spec(
    case: SlopeCase,
    u_range: (f64, f64),
    v_range: (f64, f64),
    nu: usize,
    nv: usize,
) -> SurfaceSpec {
    SurfaceSpec::new(case, example_theta(case), example_curve(case), u_range, v_range, nu, nv)
        .expect("builtin example specs are valid")
}

/// Transcribed closed-form position of the example surface.
///
/// The hyperbolic cases use `ln u` where the exact law has
/// `tanh(7) ln u` / `coth(7) ln u`; the spherical case is exact.
pub fn reference_position(case: SlopeCase, u: f64, v: f64) -> MinkowskiVec3 {
    let l = u.ln();
    match case {
        SlopeCase::TimelikeCone => {
            let r = u * 7.0f64.cosh();
            MinkowskiVec3::new(r * l.cosh() * v.cosh(), -r * l.sinh(), r * l.cosh() * v.sinh())
        }
        SlopeCase::SpacelikeConeSpherical => {
            let r = u * std::f64::consts::FRAC_1_SQRT_2;
            MinkowskiVec3::new(r * l.cos() * v.sinh(), r * l.sin(), r * l.cos() * v.cosh())
        }
        SlopeCase::SpacelikeConeHyperbolic => {
            let r = u * 7.0f64.sinh();
            MinkowskiVec3::new(-r * l.sinh(), r * l.cosh() * v.cos(), r * l.cosh() * v.sin())
        }
    }
}

/// Transcribed rotation matrix of the example surface, entry by entry,
/// including its misprints; a function of `(u, v)` with angle `ln u`.
pub fn reference_matrix(case: SlopeCase, u: f64, v: f64) -> LorentzMatrix3 {
    let l = u.ln();
    match case {
        SlopeCase::TimelikeCone => {
            let (c2, s2) = ((l / 2.0).cosh().powi(2), (l / 2.0).sinh().powi(2));
            let sl = l.sinh();
            LorentzMatrix3::from_rows([
                [
                    c2 + s2 * (2.0 * v).cosh(),
                    -sl * v.cosh(),
                    -s2 * (2.0 * v).sinh(),
                ],
                [-sl * v.cosh(), l.cosh(), sl * v.sinh()],
                [
                    s2 * (2.0 * v).sinh(),
                    -sl * v.sinh(),
                    c2 - s2 * (2.0 * v).cosh(),
                ],
            ])
        }
        SlopeCase::SpacelikeConeSpherical => {
            // transcribed as printed: rows 1-3 mix half- and full-angle sines
            // and a stray cosh; the audit quantifies which entries disagree
            let (c2, s2) = ((l / 2.0).cos().powi(2), (l / 2.0).sin().powi(2));
            let sl = l.sin();
            LorentzMatrix3::from_rows([
                [
                    c2 + s2 * (2.0 * v).cosh(),
                    (l / 2.0).sin() * v.sinh(),
                    -s2 * (2.0 * v).sinh(),
                ],
                [sl * v.sinh(), l.cosh(), -sl * v.cosh()],
                [
                    s2 * (2.0 * v).sinh(),
                    sl * v.cosh(),
                    c2 - s2 * (2.0 * v).cosh(),
                ],
            ])
        }
        SlopeCase::SpacelikeConeHyperbolic => {
            let (c2, s2) = ((l / 2.0).cosh().powi(2), (l / 2.0).sinh().powi(2));
            let sl = l.sinh();
            LorentzMatrix3::from_rows([
                [l.cosh(), -sl * v.cos(), -sl * v.sin()],
                [
                    -sl * v.cos(),
                    c2 + s2 * (2.0 * v).cos(),
                    s2 * (2.0 * v).sin(),
                ],
                [
                    -sl * v.sin(),
                    s2 * (2.0 * v).sin(),
                    c2 - s2 * (2.0 * v).cos(),
                ],
            ])
        }
    }
}

/// Compare the transcribed example matrix against the sandwich-derived one
/// over a `nu x nv` grid of the standard example window.
///
/// Both sides are evaluated at angle `ln u` so the comparison isolates the
/// printed entry structure from the rounded angle coefficient.
pub fn reference_matrix_audit(case: SlopeCase, nu: usize, nv: usize) -> Result<MatrixAudit> {
    let curve = example_curve(case);
    let mut audit = MatrixAudit::default();
    for i in 0..nu {
        let u = 0.5 + 2.5 * i as f64 / (nu - 1) as f64;
        for j in 0..nv {
            let v = -2.0 + 4.0 * j as f64 / (nv - 1) as f64;
            let reference = reference_matrix(case, u, v);
            let rotor = case_rotor(case, u.ln(), &curve.derivative(v))?;
            let truth = rotation_matrix(&rotor.q)?;
            audit.record(&reference, &truth);
        }
    }
    Ok(audit)
}

/// Outcome of one example in [`run_all`].
#[derive(Debug, Clone)]
pub struct ExampleOutcome {
    pub name: &'static str,
    pub case: SlopeCase,
    pub report: VerificationReport,
    /// Entries of the transcribed matrix that disagree with the sandwich,
    /// as 1-based (row, col, max deviation).
    pub matrix_discrepancies: Vec<(usize, usize, f64)>,
}

/// Summary of [`run_all`].
#[derive(Debug, Clone)]
pub struct ExampleSummary {
    pub outcomes: Vec<ExampleOutcome>,
}

impl ExampleSummary {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.report.pass)
    }
}

fn example_name(case: SlopeCase) -> &'static str {
    match case {
        SlopeCase::TimelikeCone => "example-1-timelike-cone",
        SlopeCase::SpacelikeConeSpherical => "example-2-spacelike-cone-spherical",
        SlopeCase::SpacelikeConeHyperbolic => "example-3-spacelike-cone-hyperbolic",
    }
}

/// Generate all three example surfaces into `out_dir`.
///
/// For each case this writes the direct-form OBJ mesh on the default
/// 96x96 grid, the verification report as JSON, and the matrix-audit table
/// as text. The pipeline is pure and the formatting fixed, so two runs
/// produce byte-identical files.
pub fn run_all(out_dir: &Path) -> Result<ExampleSummary> {
    fs::create_dir_all(out_dir)?;
    let mut outcomes = Vec::new();
    for case in SlopeCase::ALL {
        let name = example_name(case);
        let spec = example_spec(
            case,
            DEFAULT_U_RANGE,
            DEFAULT_V_RANGE,
            DEFAULT_STEPS,
            DEFAULT_STEPS,
        );

        let mesh = build_mesh(&spec, SurfaceForm::Direct)?;
        let mut obj = Vec::new();
        write_obj(&mesh, &mut obj)?;
        fs::write(out_dir.join(format!("{name}.obj")), obj)?;

        let report = spec.verify();
        fs::write(
            out_dir.join(format!("{name}.report.json")),
            format!("{}\n", report.to_json()),
        )?;

        let audit = reference_matrix_audit(case, 21, 21)?;
        fs::write(
            out_dir.join(format!("{name}.matrix-audit.txt")),
            format!("{audit}"),
        )?;

        outcomes.push(ExampleOutcome {
            name,
            case,
            report,
            matrix_discrepancies: audit.discrepancies(),
        });
    }
    Ok(ExampleSummary { outcomes })
}
