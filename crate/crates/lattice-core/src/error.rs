use thiserror::Error;

/// Errors raised while constructing lattice graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Torus dimensions below 3 wrap onto themselves and create multi-edges.
    #[error("lattice dimensions must both be at least 3, got {n}x{m}")]
    SizeTooSmall { n: usize, m: usize },

    /// A cycle needs at least 3 vertices to stay a simple graph.
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooSmall(usize),

    /// The face annotation on a truncated-square lattice is absent or does not
    /// cover every edge exactly twice, so no dual can be formed.
    #[error("invalid face annotation: {0}")]
    FaceAnnotation(String),
}
