//! Asymptotic per-site constants of the lattice energy invariants, by
//! adaptive 2D quadrature.
//!
//! As the torus grows, the invariant sums become Riemann sums of the four
//! square-root branch functions over the angle square [0, 2π]². This crate
//! evaluates those integrals with an adaptive tensor-Gauss scheme, exposes
//! the component values and the derived constants, and compares finite-size
//! per-site values against the limit.

mod constants;
mod gauss;
mod integrand;
mod quadrature;

pub use constants::{
    component_integral, convergence_study, ie_constant, lel_constant, AsymptoticConstants,
    ConvergenceRow, ConvergenceTable,
};
pub use gauss::GaussLegendre;
pub use integrand::IntegrandKind;
pub use quadrature::{integrate2d, QuadError, QuadratureResult, DOMAIN_AREA, MAX_DEPTH};
