//! Closed-form vs numeric-oracle agreement and finite-size behavior of the
//! energy invariants.

use invariants::{incidence_energy, invariant, lel, InvariantKind, Method};
use lattice_core::LatticeSize;

fn size(n: usize, m: usize) -> LatticeSize {
    LatticeSize::new(n, m).unwrap()
}

#[test]
fn methods_agree_for_all_small_sizes() {
    for n in 3..=6 {
        for m in 3..=6 {
            for kind in [InvariantKind::IncidenceEnergy, InvariantKind::Lel] {
                let closed = invariant(size(n, m), kind, Method::ClosedForm).unwrap();
                let oracle = invariant(size(n, m), kind, Method::NumericOracle).unwrap();
                assert!(
                    (closed.value - oracle.value).abs() < 1e-7,
                    "{kind} {n}x{m}: closed {} vs oracle {}",
                    closed.value,
                    oracle.value
                );
            }
        }
    }
}

// The reference constants 4.7385 and 4.6841 are the per-cell (value / nm)
// limits — equivalently 2x the per-site values reported here.

#[test]
fn incidence_energy_per_cell_near_limit_at_64() {
    let r = incidence_energy(size(64, 64), Method::ClosedForm).unwrap();
    let per_cell = r.value / (64.0 * 64.0);
    assert!(
        (per_cell - 4.7385).abs() < 2e-2,
        "per-cell {per_cell} too far from 4.7385"
    );
    assert_eq!(per_cell, 2.0 * r.per_site);
}

#[test]
fn lel_per_cell_near_limit_at_64() {
    let r = lel(size(64, 64), Method::ClosedForm).unwrap();
    let per_cell = r.value / (64.0 * 64.0);
    assert!(
        (per_cell - 4.6841).abs() < 2e-2,
        "per-cell {per_cell} too far from 4.6841"
    );
}

#[test]
fn both_invariants_positive_with_sane_per_site() {
    for n in (3..=8).chain([16, 32]) {
        for kind in [InvariantKind::IncidenceEnergy, InvariantKind::Lel] {
            let r = invariant(size(n, n), kind, Method::ClosedForm).unwrap();
            assert!(r.value > 0.0);
            assert!((1.0..=8.0).contains(&r.per_site), "{kind} {n}x{n}");
        }
    }
}
