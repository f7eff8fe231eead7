use thiserror::Error;

/// Errors from the numeric eigensolver and spectrum utilities.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    /// The Jacobi sweep limit was hit before the off-diagonal norm fell
    /// below the convergence threshold.
    #[error(
        "jacobi did not converge: off-diagonal norm {off_norm:e} above threshold {threshold:e} after {sweeps} sweeps"
    )]
    NoConvergence {
        off_norm: f64,
        threshold: f64,
        sweeps: usize,
    },

    /// Dense solves are capped to keep runtime and memory at desk scale.
    #[error("matrix order {order} exceeds the solver cap {cap}")]
    OrderCap { order: usize, cap: usize },

    /// Spectrum comparison needs equally sized multisets.
    #[error("spectrum length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}
