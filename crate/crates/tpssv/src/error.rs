//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A state parameter violates its documented domain.
    #[error("invalid state spec: {0}")]
    InvalidSpec(String),

    /// A channel parameter violates its documented domain.
    #[error("invalid channel spec: {0}")]
    InvalidChannel(String),

    /// A special-function argument is outside the documented accuracy range.
    #[error("special-function domain error: {0}")]
    Domain(String),

    /// The requested Fock cutoff cannot hold the state to the configured
    /// tail tolerance.
    #[error(
        "cutoff {cutoff} too small: estimated relative tail mass {tail:.3e} exceeds {tol:.3e}"
    )]
    CutoffTooSmall { cutoff: usize, tail: f64, tol: f64 },

    /// A grid or matrix request exceeds the resource cap.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// Operator and density-matrix cutoffs do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Displaced-state support would spill past the Fock cutoff.
    #[error("displacement leakage too large: need 8*|alpha|^2 = {need:.1} <= cutoff {cutoff}")]
    LeakageTooLarge { need: f64, cutoff: usize },

    /// An infinite series or quadrature failed its internal convergence check.
    #[error("non-convergence: {0}")]
    NonConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
