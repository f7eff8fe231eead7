//! Toroidal lattice graphs and their exact matrices.
//!
//! This crate builds the three lattice families used throughout the
//! workspace — the square torus grid, the Union Jack lattice, and the
//! truncated-square (4.8.8) lattice — as explicit simple graphs, together
//! with the integer matrices attached to them: adjacency, degree, Laplacian,
//! signless Laplacian, vertex-edge incidence, and the grid-vertex x face
//! incidence matrix whose Gram product has Kronecker form.
//!
//! All structural identities hold in exact integer arithmetic:
//!
//! * `A(grid) = E_m ⊗ A(C_n) + A(C_m) ⊗ E_n`,
//! * `M M^T = (2E_m + A(C_m)) ⊗ (2E_n + A(C_n))`,
//! * `I I^T = Q` for every builder output.
//!
//! Builders are pure functions and every type is immutable once built.

mod builders;
mod error;
mod graph;
mod matrix;
mod size;

pub use builders::{
    build_488, build_cycle, build_torus_grid, build_union_jack, dual_of_488, face_vertex_incidence,
    FaceStructure, Lattice488,
};
pub use error::LatticeError;
pub use graph::{Graph, VertexId};
pub use matrix::{kronecker, IncidenceMatrix, IntMatrix, SymmetricMatrix};
pub use size::LatticeSize;
