//! Split-quaternion geometry kernel for timelike constant slope surfaces
//! in Minkowski 3-space.
//!
//! The crate builds the three families of timelike constant slope surfaces in
//! three algebraically distinct ways — the direct parametrization, a
//! split-quaternion product, and a homothetic motion (scale times Lorentz
//! rotation) — and verifies numerically that the routes coincide and that the
//! position vector keeps a constant slope against the surface normal.
//!
//! Modules:
//! - [`minkowski`]: vectors of `E^3_1`, indefinite metric, Lorentzian cross
//!   product, causal characters, `H^2` / `S^2_1` membership.
//! - [`algebra`]: split quaternions — product, conjugation, quadratic form,
//!   causal classification, inverse, polar forms.
//! - [`rotation`]: the sandwich action of unit timelike quaternions, its 3x3
//!   matrix, half-angle rotors, and the closed-form matrix audit.
//! - [`curves`]: unit-speed profile curves on `H^2` and `S^2_1`.
//! - [`surfaces`]: the three surface families in all three forms, plus the
//!   slope-constancy verifier.
//! - [`mesh`]: grid meshing and OBJ/CSV/JSON export.
//! - [`demo`]: the three built-in example surfaces with transcribed reference
//!   data, used by the `paper-examples` CLI subcommand.

pub mod algebra;
pub mod curves;
pub mod demo;
pub mod error;
pub mod mesh;
pub mod minkowski;
pub mod rotation;
pub mod surfaces;
pub mod tolerances;

pub use algebra::{PolarDecomposition, PolarKind, SplitQuaternion};
pub use curves::{Ambient, ProfileCurve, ValidationOutcome};
pub use error::{Error, Result};
pub use mesh::{MeshFormat, MeshGrid, SurfaceForm};
pub use minkowski::{CausalClass, MinkowskiVec3};
pub use rotation::{LorentzMatrix3, Rotor};
pub use surfaces::{SlopeCase, SurfaceSpec, VerificationReport, XiOverride};
