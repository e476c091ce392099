//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The parameters do not describe a positive semi-definite unit-trace
    /// two-qubit state.
    #[error("non-physical state: {0}")]
    NonPhysical(String),

    /// A matrix passed as a local rotation is not special orthogonal.
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),

    /// A direction vector with numerically zero norm cannot be normalized.
    #[error("invalid measurement direction: zero norm")]
    InvalidDirection,

    /// Conditioning on an outcome whose probability vanishes.
    #[error("zero-probability measurement branch (P(y) <= 1e-14)")]
    ZeroProbabilityBranch,

    /// Bob's reduced state is pure (|t_B| = 1), so the steering ellipsoid
    /// degenerates to a point.
    #[error("degenerate subsystem B: |t_B| = 1 within 1e-12")]
    DegenerateB,

    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    DomainError(String),

    /// The two key-generation directions are not orthogonal.
    #[error("measurement directions are not orthogonal (|a1.a2| = {0:.3e})")]
    NotOrthogonal(f64),

    /// Bisection bracket does not straddle a zero of the rate.
    #[error("no sign change on [{lo}, {hi}]: rate({lo}) = {f_lo:.6}, rate({hi}) = {f_hi:.6}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Malformed input file or JSON document.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
