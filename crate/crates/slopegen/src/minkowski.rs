//! Vector algebra of the Minkowski 3-space with signature (-, +, +).
//!
//! The first coordinate (`t`) is the timelike axis; `a` and `b` are the
//! spacelike axes. Vectors here are the imaginary parts of split quaternions,
//! so the Lorentzian cross product below agrees with the quaternion product
//! on pure quaternions (see the `algebra` module).

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::tolerances::CAUSAL_EPS_BASE;

/// Causal character of a vector or split quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CausalClass {
    Spacelike,
    Timelike,
    Lightlike,
}

/// A vector in Minkowski 3-space, metric `diag(-1, +1, +1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 3]", from = "[f64; 3]")]
pub struct MinkowskiVec3 {
    /// Timelike component (the i-axis).
    pub t: f64,
    /// First spacelike component (the j-axis).
    pub a: f64,
    /// Second spacelike component (the k-axis).
    pub b: f64,
}

impl From<MinkowskiVec3> for [f64; 3] {
    fn from(v: MinkowskiVec3) -> Self {
        [v.t, v.a, v.b]
    }
}

impl From<[f64; 3]> for MinkowskiVec3 {
    fn from(c: [f64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }
}

impl MinkowskiVec3 {
    pub const ZERO: Self = Self { t: 0.0, a: 0.0, b: 0.0 };

    pub const fn new(t: f64, a: f64, b: f64) -> Self {
        Self { t, a, b }
    }

    /// Indefinite inner product `-t1*t2 + a1*a2 + b1*b2`.
    pub fn metric(&self, other: &Self) -> f64 {
        -self.t * other.t + self.a * other.a + self.b * other.b
    }

    /// `metric(self, self)`; negative for timelike vectors.
    pub fn metric_self(&self) -> f64 {
        self.metric(self)
    }

    /// Lorentzian cross product, the determinant with first row (-i, j, k).
    ///
    /// Componentwise: `(u.b*v.a - u.a*v.b, u.b*v.t - u.t*v.b, u.t*v.a - u.a*v.t)`.
    /// Metric-orthogonal to both factors; `i ∧ j = k` on the basis.
    pub fn lorentz_cross(&self, other: &Self) -> Self {
        Self {
            t: self.b * other.a - self.a * other.b,
            a: self.b * other.t - self.t * other.b,
            b: self.t * other.a - self.a * other.t,
        }
    }

    /// Causal character with a scale-aware tolerance.
    ///
    /// The zero vector is spacelike by convention; a nonzero vector with
    /// `|metric| <= eps` is lightlike.
    pub fn causal_character(&self) -> CausalClass {
        let q = self.metric_self();
        let eps = CAUSAL_EPS_BASE * self.euclid_norm_sq().max(1.0);
        if self.is_zero() || q > eps {
            CausalClass::Spacelike
        } else if q < -eps {
            CausalClass::Timelike
        } else {
            CausalClass::Lightlike
        }
    }

    /// `sqrt(|metric(self, self)|)`, always nonnegative.
    pub fn vnorm(&self) -> f64 {
        self.metric_self().abs().sqrt()
    }

    /// Membership in the hyperbolic plane `H^2` (upper hyperboloid sheet):
    /// `metric(w, w) = -1` within `tol` and `t > 0`.
    pub fn on_h2(&self, tol: f64) -> bool {
        (self.metric_self() + 1.0).abs() <= tol && self.t > 0.0
    }

    /// Membership in the pseudo-sphere `S_1^2`: `metric(w, w) = +1` within `tol`.
    pub fn on_s12(&self, tol: f64) -> bool {
        (self.metric_self() - 1.0).abs() <= tol
    }

    /// Euclidean squared norm, used only for tolerance scaling and error metrics.
    pub fn euclid_norm_sq(&self) -> f64 {
        self.t * self.t + self.a * self.a + self.b * self.b
    }

    /// Euclidean norm, used for error metrics (the Minkowski norm can vanish
    /// on nonzero differences).
    pub fn euclid_norm(&self) -> f64 {
        self.euclid_norm_sq().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.t == 0.0 && self.a == 0.0 && self.b == 0.0
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.t * s, self.a * s, self.b * s)
    }
}

impl Add for MinkowskiVec3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.t + rhs.t, self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for MinkowskiVec3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.t - rhs.t, self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for MinkowskiVec3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.t, -self.a, -self.b)
    }
}

impl Mul<f64> for MinkowskiVec3 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}
