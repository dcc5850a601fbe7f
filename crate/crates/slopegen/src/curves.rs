//! Unit-speed profile curves on the hyperbolic plane `H^2` and the
//! pseudo-sphere `S^2_1`.
//!
//! Every curve is closed-form with an analytic derivative; there is no
//! sampled-curve path. The three-form surface equivalence needs exact
//! unit-speed and ambient hypotheses, and numerically differentiated curves
//! would contaminate those checks. Finite differences appear only as a
//! validation cross-check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{CausalClass, MinkowskiVec3};
use crate::tolerances::{CURVE_FD_STEP, CURVE_INVARIANT_TOL};

/// Ambient quadric the curve lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    /// Upper hyperboloid sheet, `metric(x, x) = -1`, `t > 0`.
    H2,
    /// Pseudo-sphere (de Sitter surface), `metric(x, x) = +1`.
    S12,
}

impl Ambient {
    /// The value of `metric(position, position)` on the quadric.
    pub fn quadric_value(self) -> f64 {
        match self {
            Ambient::H2 => -1.0,
            Ambient::S12 => 1.0,
        }
    }
}

/// Closed forms behind the builtin registry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
enum CurveForm {
    /// `(cosh v, 0, sinh v)` on `H^2`, spacelike unit tangent.
    H2Hyperbola,
    /// `(sinh v, 0, cosh v)` on `S^2_1`, timelike unit tangent.
    S12TimelikeHyperbola,
    /// `(0, cos v, sin v)` on `S^2_1`, spacelike unit tangent.
    S12Circle,
    /// `(cosh a, sinh a cos(v/sinh a), sinh a sin(v/sinh a))`: the circle of
    /// hyperbolic latitude `a` on `H^2`, arc-length parametrized.
    H2Circle { a: f64 },
    /// `(sinh a, cosh a cos(v/cosh a), cosh a sin(v/cosh a))`: a circle
    /// offset to constant time-height `sinh a` on `S^2_1`, spacelike tangent.
    S12OffsetCircle { a: f64 },
}

/// A named unit-speed curve with analytic position and derivative.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileCurve {
    name: String,
    ambient: Ambient,
    tangent_character: CausalClass,
    form: CurveForm,
    params: BTreeMap<String, f64>,
}

/// Names accepted by [`ProfileCurve::builtin`].
pub const BUILTIN_CURVES: [&str; 5] = [
    "h2-hyperbola",
    "s12-timelike-hyperbola",
    "s12-circle",
    "h2-circle",
    "s12-spacelike-circle-like",
];

impl ProfileCurve {
    /// Look up a builtin curve by registry name.
    ///
    /// `h2-circle` and `s12-spacelike-circle-like` take a latitude parameter
    /// `a`; the other curves take no parameters. The constructed curve is
    /// validated on a 101-point grid before being returned.
    pub fn builtin(name: &str, params: &BTreeMap<String, f64>) -> Result<Self> {
        let get_a = || -> Result<f64> {
            params
                .get("a")
                .copied()
                .ok_or_else(|| Error::InvalidParam(format!("curve `{name}` needs `a`")))
        };
        let reject_params = |curve: &str| -> Result<()> {
            if params.is_empty() {
                Ok(())
            } else {
                Err(Error::InvalidParam(format!(
                    "curve `{curve}` takes no parameters"
                )))
            }
        };
        let (ambient, tangent_character, form) = match name {
            "h2-hyperbola" => {
                reject_params(name)?;
                (Ambient::H2, CausalClass::Spacelike, CurveForm::H2Hyperbola)
            }
            "s12-timelike-hyperbola" => {
                reject_params(name)?;
                (Ambient::S12, CausalClass::Timelike, CurveForm::S12TimelikeHyperbola)
            }
            "s12-circle" => {
                reject_params(name)?;
                (Ambient::S12, CausalClass::Spacelike, CurveForm::S12Circle)
            }
            "h2-circle" => {
                let a = get_a()?;
                if a == 0.0 || !a.is_finite() {
                    return Err(Error::InvalidParam(
                        "h2-circle needs a nonzero finite `a` (sinh a divides the argument)"
                            .into(),
                    ));
                }
                (Ambient::H2, CausalClass::Spacelike, CurveForm::H2Circle { a })
            }
            "s12-spacelike-circle-like" => {
                let a = get_a()?;
                if !a.is_finite() {
                    return Err(Error::InvalidParam(
                        "s12-spacelike-circle-like needs a finite `a`".into(),
                    ));
                }
                (Ambient::S12, CausalClass::Spacelike, CurveForm::S12OffsetCircle { a })
            }
            other => return Err(Error::UnknownCurve(other.to_string())),
        };
        let curve = Self {
            name: name.to_string(),
            ambient,
            tangent_character,
            form,
            params: params.clone(),
        };
        // constructor gate: the hypotheses must hold numerically, or the
        // parameters are out of the range the kernel can certify
        let outcome = validate(&curve, -2.0, 2.0, 101);
        if !outcome.invariants_hold(CURVE_INVARIANT_TOL) {
            return Err(Error::InvalidParam(format!(
                "curve `{name}` fails its invariants at this parameter scale: {outcome}"
            )));
        }
        Ok(curve)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Causal character of the tangent: spacelike or timelike, never lightlike.
    pub fn tangent_character(&self) -> CausalClass {
        self.tangent_character
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    pub fn position(&self, v: f64) -> MinkowskiVec3 {
        match &self.form {
            CurveForm::H2Hyperbola => MinkowskiVec3::new(v.cosh(), 0.0, v.sinh()),
            CurveForm::S12TimelikeHyperbola => MinkowskiVec3::new(v.sinh(), 0.0, v.cosh()),
            CurveForm::S12Circle => MinkowskiVec3::new(0.0, v.cos(), v.sin()),
            CurveForm::H2Circle { a } => {
                let r = a.sinh();
                MinkowskiVec3::new(a.cosh(), r * (v / r).cos(), r * (v / r).sin())
            }
            CurveForm::S12OffsetCircle { a } => {
                let r = a.cosh();
                MinkowskiVec3::new(a.sinh(), r * (v / r).cos(), r * (v / r).sin())
            }
        }
    }

    pub fn derivative(&self, v: f64) -> MinkowskiVec3 {
        match &self.form {
            CurveForm::H2Hyperbola => MinkowskiVec3::new(v.sinh(), 0.0, v.cosh()),
            CurveForm::S12TimelikeHyperbola => MinkowskiVec3::new(v.cosh(), 0.0, v.sinh()),
            CurveForm::S12Circle => MinkowskiVec3::new(0.0, -v.sin(), v.cos()),
            CurveForm::H2Circle { a } => {
                let r = a.sinh();
                MinkowskiVec3::new(0.0, -(v / r).sin(), (v / r).cos())
            }
            CurveForm::S12OffsetCircle { a } => {
                let r = a.cosh();
                MinkowskiVec3::new(0.0, -(v / r).sin(), (v / r).cos())
            }
        }
    }
}

/// Worst deviations of the curve hypotheses over a sample grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValidationOutcome {
    /// Max `|metric(f, f) - c|` with `c` the ambient quadric value.
    pub max_ambient_dev: f64,
    /// Max `|metric(f', f') - s|` with `s = +1` (spacelike) or `-1` (timelike).
    pub max_speed_dev: f64,
    /// Max `|metric(f, f')|`.
    pub max_orthogonality_dev: f64,
    /// Max componentwise gap between the analytic derivative and a central
    /// finite difference with step 1e-5.
    pub max_fd_dev: f64,
    /// Points sampled.
    pub samples: usize,
}

impl ValidationOutcome {
    /// The three analytic invariants (FD is a cross-check with its own budget).
    pub fn invariants_hold(&self, tol: f64) -> bool {
        self.max_ambient_dev <= tol
            && self.max_speed_dev <= tol
            && self.max_orthogonality_dev <= tol
    }
}

impl fmt::Display for ValidationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ambient {:.3e}, speed {:.3e}, orthogonality {:.3e}, fd {:.3e} over {} samples",
            self.max_ambient_dev,
            self.max_speed_dev,
            self.max_orthogonality_dev,
            self.max_fd_dev,
            self.samples
        )
    }
}

/// Sample the curve hypotheses on `n` evenly spaced points of `[v_min, v_max]`.
pub fn validate(curve: &ProfileCurve, v_min: f64, v_max: f64, n: usize) -> ValidationOutcome {
    assert!(n >= 2 && v_min < v_max, "need n >= 2 and v_min < v_max");
    let quadric = curve.ambient().quadric_value();
    let speed = match curve.tangent_character() {
        CausalClass::Timelike => -1.0,
        _ => 1.0,
    };
    let dv = (v_max - v_min) / (n - 1) as f64;
    let mut out = ValidationOutcome {
        max_ambient_dev: 0.0,
        max_speed_dev: 0.0,
        max_orthogonality_dev: 0.0,
        max_fd_dev: 0.0,
        samples: n,
    };
    for i in 0..n {
        let v = v_min + i as f64 * dv;
        let p = curve.position(v);
        let d = curve.derivative(v);
        out.max_ambient_dev = out.max_ambient_dev.max((p.metric_self() - quadric).abs());
        out.max_speed_dev = out.max_speed_dev.max((d.metric_self() - speed).abs());
        out.max_orthogonality_dev = out.max_orthogonality_dev.max(p.metric(&d).abs());
        let h = CURVE_FD_STEP;
        let fd = (curve.position(v + h) - curve.position(v - h)).scale(1.0 / (2.0 * h));
        out.max_fd_dev = out.max_fd_dev.max((fd - d).euclid_norm());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn builtin(name: &str) -> ProfileCurve {
        ProfileCurve::builtin(name, &BTreeMap::new()).unwrap()
    }

    fn builtin_a(name: &str, a: f64) -> Result<ProfileCurve> {
        let mut p = BTreeMap::new();
        p.insert("a".to_string(), a);
        ProfileCurve::builtin(name, &p)
    }

    #[test]
    fn h2_hyperbola_at_origin() {
        let c = builtin("h2-hyperbola");
        assert_eq!(c.position(0.0), MinkowskiVec3::new(1.0, 0.0, 0.0));
        assert_eq!(c.derivative(0.0), MinkowskiVec3::new(0.0, 0.0, 1.0));
        assert_eq!(c.ambient(), Ambient::H2);
        assert_eq!(c.tangent_character(), CausalClass::Spacelike);
    }

    #[test]
    fn s12_circle_quarter_turn() {
        let c = builtin("s12-circle");
        let p = c.position(std::f64::consts::FRAC_PI_2);
        let d = c.derivative(std::f64::consts::FRAC_PI_2);
        assert!((p - MinkowskiVec3::new(0.0, 0.0, 1.0)).euclid_norm() < 1e-15);
        assert!((d - MinkowskiVec3::new(0.0, -1.0, 0.0)).euclid_norm() < 1e-15);
    }

    #[test]
    fn s12_timelike_hyperbola_has_timelike_tangent() {
        let c = builtin("s12-timelike-hyperbola");
        assert_eq!(c.tangent_character(), CausalClass::Timelike);
        let out = validate(&c, -2.0, 2.0, 101);
        // tangent checked against -1
        assert!(out.max_speed_dev <= 1e-10, "{out}");
    }

    #[test]
    fn h2_circle_constraint_algebra() {
        // f = (cosh 1, sinh 1 cos(v/sinh 1), sinh 1 sin(v/sinh 1)):
        // metric(f,f) = -cosh^2 1 + sinh^2 1 = -1 and metric(f',f') = 1
        let c = builtin_a("h2-circle", 1.0).unwrap();
        for k in 0..7 {
            let v = -2.0 + 0.6 * k as f64;
            assert!((c.position(v).metric_self() + 1.0).abs() < 1e-14);
            assert!((c.derivative(v).metric_self() - 1.0).abs() < 1e-14);
            assert!(c.position(v).metric(&c.derivative(v)).abs() < 1e-14);
        }
    }

    #[test]
    fn registry_errors() {
        assert!(matches!(
            ProfileCurve::builtin("nope", &BTreeMap::new()),
            Err(Error::UnknownCurve(_))
        ));
        assert!(matches!(builtin_a("h2-circle", 0.0), Err(Error::InvalidParam(_))));
        // missing parameter
        assert!(matches!(
            ProfileCurve::builtin("h2-circle", &BTreeMap::new()),
            Err(Error::InvalidParam(_))
        ));
        // stray parameter on a parameterless curve
        let mut p = BTreeMap::new();
        p.insert("a".to_string(), 1.0);
        assert!(matches!(
            ProfileCurve::builtin("h2-hyperbola", &p),
            Err(Error::InvalidParam(_))
        ));
    }

    #[test]
    fn all_builtins_validate() {
        let curves = [
            builtin("h2-hyperbola"),
            builtin("s12-timelike-hyperbola"),
            builtin("s12-circle"),
            builtin_a("h2-circle", 0.8).unwrap(),
            builtin_a("s12-spacelike-circle-like", 0.6).unwrap(),
        ];
        for c in &curves {
            let out = validate(c, -2.0, 2.0, 101);
            assert!(out.invariants_hold(1e-10), "{}: {out}", c.name());
            // analytic derivative vs central finite difference
            assert!(out.max_fd_dev <= 1e-7, "{}: fd {:.3e}", c.name(), out.max_fd_dev);
        }
    }

    #[test]
    fn corrupted_curve_is_caught() {
        // scaling the position by 1.01 shifts the S12 quadric by ~0.02
        let c = builtin("s12-circle");
        let quadric = 1.0;
        let mut worst: f64 = 0.0;
        for i in 0..101 {
            let v = -2.0 + 4.0 * i as f64 / 100.0;
            let p = c.position(v).scale(1.01);
            worst = worst.max((p.metric_self() - quadric).abs());
        }
        assert!((worst - 0.0201).abs() < 1e-10, "got {worst}");
    }
}
