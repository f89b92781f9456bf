//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by state construction, channel application, measure
/// evaluation, and circuit simulation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (deviation {deviation:.3e} exceeds {tol:.3e})")]
    NonHermitian { deviation: f64, tol: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    #[error("invalid density operator: {0}")]
    InvalidState(String),

    #[error("relative entropy diverges: support of the first argument is not contained in the support of the second")]
    SupportViolation,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subsystem index {index} out of range for {count} subsystems")]
    BadIndex { index: usize, count: usize },

    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("bad dimension {0}")]
    BadDimension(usize),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("basis vectors are not orthonormal (Gram deviation {deviation:.3e})")]
    NotOrthonormal { deviation: f64 },

    #[error("bases are not mutually unbiased (max overlap deviation {max_dev:.3e})")]
    NotMutuallyUnbiased { max_dev: f64 },

    #[error("operation requires dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("diagonal is rank deficient: entry {index} is {value:.3e}")]
    RankDeficient { index: usize, value: f64 },

    #[error("state is not pure (purity {purity})")]
    NotPure { purity: f64 },

    #[error("matrix is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("problem too large: {0}")]
    TooLarge(String),

    #[error("dagger parameter identity failed (deviation {deviation:.3e})")]
    IdentityViolation { deviation: f64 },

    #[error("configuration error: {0}")]
    ConfigError(String),

    #[error("empty histogram")]
    EmptyHistogram,

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
