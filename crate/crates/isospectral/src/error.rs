//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, validation, and numeric routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Spectrum points must be strictly increasing (hence distinct).
    #[error("spectrum points must be strictly increasing: lambda[{index}] = {value} does not exceed its predecessor")]
    SpectrumNotIncreasing { index: usize, value: f64 },

    /// A distribution needs at least one support point.
    #[error("distribution support is empty")]
    EmptySupport,

    /// Homogeneous weights must all carry the same strict sign.
    #[error("weights must be nonzero and share one sign; weight[{index}] = {value}")]
    MixedSignWeights { index: usize, value: f64 },

    /// Two collections that must align have different lengths.
    #[error("{what}: expected length {expected}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// Tridiagonal entry vectors must have odd length 2d-1.
    #[error("tridiagonal entry sequence must have odd length, got {0}")]
    EvenEntryCount(usize),

    /// Operation requires a Jacobi matrix (strictly positive off-diagonals).
    #[error("matrix is not Jacobi: off-diagonal entry {index} is {value}")]
    NotJacobi { index: usize, value: f64 },

    /// Index blocks fail to form an ordered partition of [d].
    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),

    /// Set sequence fails the chain conditions.
    #[error("invalid chain: {0}")]
    InvalidChain(String),

    /// Dimension outside the supported enumeration range.
    #[error("{what} supports d in {min}..={max}, got {got}")]
    DimensionOutOfRange {
        what: &'static str,
        min: usize,
        max: usize,
        got: usize,
    },

    /// Squared gap products C_i^S require i outside S.
    #[error("gap product requires index {0} outside the subset")]
    IndexInsideSubset(usize),

    /// Blow-up coordinates are structurally inconsistent.
    #[error("blow-up point is inconsistent: {0}")]
    InconsistentPoint(String),

    /// Operation defined only on full-support distributions.
    #[error("operation requires full support on the spectrum")]
    PartialSupport,

    /// Curve parameter must lie in (0, 1).
    #[error("curve parameter t = {0} outside (0, 1)")]
    ParameterOutOfRange(f64),

    /// A numeric routine failed to converge or produced invalid data.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Malformed input record.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True when the error reflects malformed or out-of-contract input,
    /// as opposed to a numeric failure inside an otherwise valid request.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Numeric(_))
    }
}
