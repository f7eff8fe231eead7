//! Eigenvalue spectra of the Union Jack lattice, two independent ways.
//!
//! The closed-form enumerators list all `2 n m` Laplacian and
//! signless-Laplacian eigenvalues directly from the torus angles, while the
//! cyclic Jacobi solver diagonalizes the explicitly built matrices without
//! knowing anything about the lattice structure. [`compare_spectra`] ties
//! the two routes together as sorted multisets.

mod closed_form;
mod compare;
mod error;
mod jacobi;

pub use closed_form::{
    closed_form_l_spectrum, closed_form_q_spectrum, cycle_spectrum, l_branch_pair, q_branch_pair,
    Branch, ClosedFormSpectrum, SpectrumEntry,
};
pub use compare::{compare_spectra, SpectrumComparison};
pub use error::SpectraError;
pub use jacobi::{numeric_spectrum, numeric_spectrum_with, JacobiOptions, NumericSpectrum};
