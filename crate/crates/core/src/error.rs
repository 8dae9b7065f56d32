//! Crate-wide error type.

/// Errors reported by the algebra, special-function, kernel, and transform layers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Two multivectors or vectors from different Cl(0,m) were combined.
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// Dimension outside the supported range for the requested operation.
    #[error("unsupported dimension m = {m}: {reason}")]
    UnsupportedDimension { m: usize, reason: &'static str },

    /// A scalar parameter violated its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Bessel order outside the integer/half-integer family this crate evaluates.
    #[error("unsupported Bessel order nu = {0}; need n or n + 1/2 with n >= -1")]
    UnsupportedOrder(f64),

    /// Gamma function evaluated at a pole.
    #[error("gamma function pole at x = {0}")]
    GammaPole(f64),

    /// Grade projection outside 0..=m.
    #[error("grade {grade} out of range for m = {m}")]
    GradeOutOfRange { grade: usize, m: usize },

    /// A polynomial expected to be monogenic is not annihilated by the Dirac operator.
    #[error("polynomial is not monogenic: |dirac| = {0:.3e}")]
    NotMonogenic(f64),

    /// A polynomial expected to be homogeneous of a given degree is not.
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    /// alpha sits on {0, +pi, -pi}: the quadrature kernel is undefined there and
    /// the caller must use the exceptional-parameter operator instead.
    #[error("exceptional alpha = {0}: sin(alpha) = 0; use exceptional_operator")]
    ExceptionalAlpha(f64),

    /// Serialized form failed validation.
    #[error("deserialization: {0}")]
    Deserialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
