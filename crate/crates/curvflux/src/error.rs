//! Error type shared by every module in the crate.
//!
//! The library is strict about inputs: empty spectra, out-of-range indices,
//! degenerate metrics, and non-finite floating-point values are all rejected
//! eagerly rather than propagated as NaN.

use thiserror::Error;

/// Everything that can go wrong when building algebraic or geometric objects.
#[derive(Debug, Error)]
pub enum CurvError {
    /// A spectrum needs at least one curvature entry.
    #[error("spectrum must contain at least one entry")]
    EmptySpectrum,

    /// A degree, index, or dimension was outside its documented range.
    #[error("index out of range: {what} = {got}, allowed {allowed}")]
    IndexOutOfRange {
        what: &'static str,
        got: usize,
        allowed: String,
    },

    /// A floating-point input or intermediate was NaN or infinite.
    #[error("non-finite value encountered in {context}")]
    NonFinite { context: String },

    /// A matrix failed a structural requirement (symmetry, squareness, ...).
    #[error("matrix is not {requirement}: max deviation {deviation:e}")]
    MatrixStructure {
        requirement: &'static str,
        deviation: f64,
    },

    /// Eigenvalues were requested for a non-diagonal matrix in exact mode.
    #[error("exact-arithmetic spectra are only available for diagonal matrices")]
    ExactEigenUnsupported,

    /// A numeric routine failed to reach its accuracy target.
    #[error("numerical failure in {context}: {detail}")]
    Numerical { context: String, detail: String },

    /// A chart or frame was evaluated where the parametrization degenerates.
    #[error("degenerate geometry at {context}: {detail}")]
    DegenerateGeometry { context: String, detail: String },

    /// A scalar parameter was outside its admissible interval.
    #[error("parameter {name} = {value} outside {expected}")]
    ParameterRange {
        name: &'static str,
        value: f64,
        expected: String,
    },

    /// An operation precondition (constant weight, closed field, ...) failed.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A root-finding bracket did not change sign.
    #[error("bracketing failed for {context}: {detail}")]
    Bracket { context: String, detail: String },
}

/// Convenient alias used across the crate.
pub type Result<T> = std::result::Result<T, CurvError>;

impl CurvError {
    /// Helper for the common "index k must lie in 0..=n" complaint.
    pub(crate) fn bad_index(what: &'static str, got: usize, allowed: impl Into<String>) -> Self {
        CurvError::IndexOutOfRange {
            what,
            got,
            allowed: allowed.into(),
        }
    }

    /// Helper for non-finite diagnostics.
    pub(crate) fn non_finite(context: impl Into<String>) -> Self {
        CurvError::NonFinite {
            context: context.into(),
        }
    }
}
