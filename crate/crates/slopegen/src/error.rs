//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("lightlike quaternion has no inverse")]
    NotInvertible,
    #[error("norm is degenerate (lightlike input)")]
    DegenerateNorm,
    #[error("no polar form: {0}")]
    NotDecomposable(&'static str),
    #[error("rotation requires a timelike quaternion")]
    NotTimelike,
    #[error("axis causal character does not match the surface case")]
    AxisCausalityMismatch,
    #[error("axis is not unit in the Minkowski metric (|vnorm - 1| = {0:.3e})")]
    AxisNotUnit(f64),
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("invalid curve parameter: {0}")]
    InvalidParam(String),
    #[error("u must be positive and finite (got {0})")]
    NonpositiveU(f64),
    #[error("invalid theta: {0}")]
    InvalidTheta(String),
    #[error("curve `{curve}` is not compatible with this surface case")]
    CurveCaseMismatch { curve: String },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("degenerate surface normal at (u, v) = ({u}, {v})")]
    DegenerateNormal { u: f64, v: f64 },
    #[error("degenerate position vector at (u, v) = ({u}, {v})")]
    DegeneratePosition { u: f64, v: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}
