//! Split-quaternion arithmetic.
//!
//! A split quaternion `w + x i + y j + z k` obeys `i^2 = -1`, `j^2 = k^2 = +1`,
//! `i j = k`, `j k = -i`, `k i = j`, with anticommuting distinct units. The
//! quadratic form `I_p = w^2 + x^2 - y^2 - z^2` is multiplicative and its sign
//! splits the algebra into timelike, spacelike and lightlike elements; only
//! the first two are invertible.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{CausalClass, MinkowskiVec3};
use crate::tolerances::CAUSAL_EPS_BASE;

/// Split quaternion, stored as `(w, x, y, z)` = scalar then i, j, k components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 4]", from = "[f64; 4]")]
pub struct SplitQuaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<SplitQuaternion> for [f64; 4] {
    fn from(q: SplitQuaternion) -> Self {
        [q.w, q.x, q.y, q.z]
    }
}

impl From<[f64; 4]> for SplitQuaternion {
    fn from(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

/// Which polar form a quaternion decomposes into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolarKind {
    /// Spacelike: `N (sinh θ + v cosh θ)` with `v` unit spacelike.
    SpacelikeForm,
    /// Timelike with spacelike vector part: `N (cosh θ + v sinh θ)`.
    TimelikeSpacelikeVec,
    /// Timelike with timelike vector part: `N (cos θ + v sin θ)`.
    TimelikeTimelikeVec,
}

/// Polar decomposition of a non-lightlike split quaternion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarDecomposition {
    pub kind: PolarKind,
    /// The norm `N_p`, always >= 0.
    pub magnitude: f64,
    /// Hyperbolic or spherical angle, depending on the kind.
    pub angle: f64,
    /// Unit axis in the Minkowski metric.
    pub axis: MinkowskiVec3,
}

impl PolarDecomposition {
    /// Rebuild the quaternion this decomposition came from.
    pub fn reconstruct(&self) -> SplitQuaternion {
        let (c, s) = match self.kind {
            PolarKind::SpacelikeForm => (self.angle.sinh(), self.angle.cosh()),
            PolarKind::TimelikeSpacelikeVec => (self.angle.cosh(), self.angle.sinh()),
            PolarKind::TimelikeTimelikeVec => (self.angle.cos(), self.angle.sin()),
        };
        SplitQuaternion::from_parts(self.magnitude * c, self.axis.scale(self.magnitude * s))
    }
}

impl SplitQuaternion {
    pub const IDENTITY: Self = Self { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const ZERO: Self = Self { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Self = Self { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Self = Self { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Self = Self { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_parts(scalar: f64, vector: MinkowskiVec3) -> Self {
        Self::new(scalar, vector.t, vector.a, vector.b)
    }

    /// Embed a Minkowski vector as a pure split quaternion.
    pub fn pure(vector: MinkowskiVec3) -> Self {
        Self::from_parts(0.0, vector)
    }

    pub fn scalar_part(&self) -> f64 {
        self.w
    }

    pub fn vector_part(&self) -> MinkowskiVec3 {
        MinkowskiVec3::new(self.x, self.y, self.z)
    }

    /// Split-quaternion product.
    ///
    /// Scalar part `w1 w2 + <V1, V2>` with the Minkowski inner product on the
    /// vector parts; vector part `w1 V2 + w2 V1 + V1 ∧ V2` with the Lorentzian
    /// cross product. This is the basis multiplication table in closed form.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let v1 = self.vector_part();
        let v2 = rhs.vector_part();
        let scalar = self.w * rhs.w + v1.metric(&v2);
        let vector = v2.scale(self.w) + v1.scale(rhs.w) + v1.lorentz_cross(&v2);
        Self::from_parts(scalar, vector)
    }

    /// Conjugate: negate the vector part.
    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// The quadratic form `I_p = w^2 + x^2 - y^2 - z^2`.
    ///
    /// Equals the scalar part of `p * conj(p)`; its sign classifies the
    /// quaternion and it is multiplicative under the product.
    pub fn quadratic_form(&self) -> f64 {
        self.w * self.w + self.x * self.x - self.y * self.y - self.z * self.z
    }

    /// `N_p = sqrt(|I_p|)`.
    pub fn norm(&self) -> f64 {
        self.quadratic_form().abs().sqrt()
    }

    /// Timelike for `I_p > eps`, spacelike for `I_p < -eps`, lightlike between,
    /// with `eps` scaled by the squared Euclidean magnitude.
    pub fn classify(&self) -> CausalClass {
        let q = self.quadratic_form();
        let eps = self.classification_eps();
        if q > eps {
            CausalClass::Timelike
        } else if q < -eps {
            CausalClass::Spacelike
        } else {
            CausalClass::Lightlike
        }
    }

    fn classification_eps(&self) -> f64 {
        CAUSAL_EPS_BASE * self.euclid_norm_sq().max(1.0)
    }

    /// `p^{-1} = conj(p) / I_p`; lightlike quaternions have no inverse.
    pub fn inverse(&self) -> Result<Self> {
        let q = self.quadratic_form();
        if q.abs() <= self.classification_eps() {
            return Err(Error::NotInvertible);
        }
        let c = self.conjugate();
        Ok(Self::new(c.w / q, c.x / q, c.y / q, c.z / q))
    }

    /// Rescale to unit norm. Fails when `N_p` is below the degeneracy guard.
    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm();
        if n * n <= self.classification_eps() {
            return Err(Error::DegenerateNorm);
        }
        Ok(Self::new(self.w / n, self.x / n, self.y / n, self.z / n))
    }

    /// Polar decomposition into one of the three canonical forms.
    ///
    /// Spacelike quaternions always decompose. Timelike quaternions decompose
    /// when the vector part is non-lightlike; the form with a spacelike vector
    /// part additionally requires a positive scalar part, since
    /// `N cosh θ > 0` cannot reach a negative one.
    pub fn polar_decompose(&self) -> Result<PolarDecomposition> {
        let class = self.classify();
        let n = self.norm();
        let v = self.vector_part();
        match class {
            CausalClass::Lightlike => Err(Error::NotDecomposable("quaternion is lightlike")),
            CausalClass::Spacelike => {
                // I_p < 0 forces a spacelike vector part with |V| = N cosh θ.
                let vn = v.vnorm();
                Ok(PolarDecomposition {
                    kind: PolarKind::SpacelikeForm,
                    magnitude: n,
                    angle: (self.w / n).asinh(),
                    axis: v.scale(1.0 / vn),
                })
            }
            CausalClass::Timelike => {
                if v.is_zero() {
                    // Any axis works at angle 0 (or pi for a negative scalar);
                    // fix the timelike basis axis for determinism.
                    return Ok(PolarDecomposition {
                        kind: PolarKind::TimelikeTimelikeVec,
                        magnitude: n,
                        angle: if self.w >= 0.0 { 0.0 } else { std::f64::consts::PI },
                        axis: MinkowskiVec3::new(1.0, 0.0, 0.0),
                    });
                }
                match v.causal_character() {
                    CausalClass::Lightlike => {
                        Err(Error::NotDecomposable("vector part is lightlike"))
                    }
                    CausalClass::Spacelike => {
                        if self.w < 0.0 {
                            return Err(Error::NotDecomposable(
                                "timelike quaternion with spacelike vector part and negative \
                                 scalar part has no cosh-form",
                            ));
                        }
                        let vn = v.vnorm();
                        Ok(PolarDecomposition {
                            kind: PolarKind::TimelikeSpacelikeVec,
                            magnitude: n,
                            angle: (vn / n).asinh(),
                            axis: v.scale(1.0 / vn),
                        })
                    }
                    CausalClass::Timelike => {
                        let vn = v.vnorm();
                        Ok(PolarDecomposition {
                            kind: PolarKind::TimelikeTimelikeVec,
                            magnitude: n,
                            angle: vn.atan2(self.w),
                            axis: v.scale(1.0 / vn),
                        })
                    }
                }
            }
        }
    }

    pub fn euclid_norm_sq(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Componentwise maximum absolute difference, for test comparisons.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.w - other.w)
            .abs()
            .max((self.x - other.x).abs())
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul for SplitQuaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs)
    }
}

impl Add for SplitQuaternion {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for SplitQuaternion {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for SplitQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}
