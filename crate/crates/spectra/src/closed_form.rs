//! Closed-form eigenvalue enumeration for the Union Jack lattice.
//!
//! For torus angles `α_i = 2πi/n` and `β_j = 2πj/m`, each `(i, j)` pair
//! contributes two eigenvalues, the roots of a quadratic whose sum and
//! product are known in closed form:
//!
//! * signless Laplacian: `S ± sqrt(S² - P)` with `S = 6 + cos α + cos β`
//!   and `P = 4(7 + cos α + cos β - cos α cos β)`,
//! * Laplacian: `S' ± sqrt(S'² - P')` with `S' = 6 - cos α - cos β` and
//!   `P' = 4(7 - 3 cos α - 3 cos β - cos α cos β)`.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use lattice_core::{LatticeError, LatticeSize};

/// Quadratic-root branch: `Plus` is `S + sqrt(disc)`, `Minus` is
/// `S - sqrt(disc)`. Orders before `Minus` in the enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign_char(self) -> char {
        match self {
            Branch::Plus => '+',
            Branch::Minus => '-',
        }
    }
}

/// One closed-form eigenvalue, tagged with its `(i, j, ±)` mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub i: usize,
    pub j: usize,
    pub branch: Branch,
    pub value: f64,
}

/// The full closed-form spectrum of a lattice size: `2 n m` eigenvalues in
/// lexicographic `(i, j, branch)` order.
#[derive(Debug, Clone)]
pub struct ClosedFormSpectrum {
    size: LatticeSize,
    entries: Vec<SpectrumEntry>,
}

impl ClosedFormSpectrum {
    pub fn size(&self) -> LatticeSize {
        self.size
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Eigenvalues in enumeration order.
    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.value).collect()
    }

    /// Eigenvalues sorted ascending, for multiset comparison.
    pub fn values_sorted(&self) -> Vec<f64> {
        let mut v = self.values();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Plain sum of all eigenvalues (the trace of the source matrix).
    pub fn sum(&self) -> f64 {
        self.entries.iter().map(|e| e.value).sum()
    }

    /// CSV dump: header `i,j,sign,value`, one row per entry in enumeration
    /// order, values at 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,sign,value\n");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{},{},{},{:.16e}",
                e.i,
                e.j,
                e.branch.sign_char(),
                e.value
            );
        }
        out
    }
}

// Discriminants are nonnegative by symmetry of the source matrices; only
// cancellation at the degenerate (π, π) mode can push them a hair below
// zero, so anything under -1e-12 is a formula bug, not roundoff.
const DISC_CLAMP: f64 = -1e-12;

fn clamped_sqrt(disc: f64) -> f64 {
    assert!(disc >= DISC_CLAMP, "discriminant {disc} below clamp window");
    disc.max(0.0).sqrt()
}

/// Both signless-Laplacian branch values at the (continuous) angle pair
/// with cosines `cos_a`, `cos_b`. Returns `(plus, minus)`.
pub fn q_branch_pair(cos_a: f64, cos_b: f64) -> (f64, f64) {
    let s = 6.0 + cos_a + cos_b;
    let p = 4.0 * (7.0 + cos_a + cos_b - cos_a * cos_b);
    let root = clamped_sqrt(s * s - p);
    (s + root, (s - root).max(0.0))
}

/// Both Laplacian branch values at cosines `cos_a`, `cos_b`.
/// Returns `(plus, minus)`.
pub fn l_branch_pair(cos_a: f64, cos_b: f64) -> (f64, f64) {
    let s = 6.0 - cos_a - cos_b;
    let p = 4.0 * (7.0 - 3.0 * cos_a - 3.0 * cos_b - cos_a * cos_b);
    let root = clamped_sqrt(s * s - p);
    (s + root, (s - root).max(0.0))
}

fn enumerate(size: LatticeSize, pair: impl Fn(f64, f64) -> (f64, f64)) -> ClosedFormSpectrum {
    let (n, m) = (size.n(), size.m());
    let mut entries = Vec::with_capacity(2 * size.sites());
    for i in 0..n {
        let cos_a = (TAU * i as f64 / n as f64).cos();
        for j in 0..m {
            let cos_b = (TAU * j as f64 / m as f64).cos();
            let (plus, minus) = pair(cos_a, cos_b);
            entries.push(SpectrumEntry {
                i,
                j,
                branch: Branch::Plus,
                value: plus,
            });
            entries.push(SpectrumEntry {
                i,
                j,
                branch: Branch::Minus,
                value: minus,
            });
        }
    }
    ClosedFormSpectrum { size, entries }
}

/// Closed-form signless-Laplacian spectrum of the Union Jack lattice:
/// `2 n m` positive eigenvalues.
///
/// ```
/// use lattice_core::LatticeSize;
/// use spectra::closed_form_q_spectrum;
///
/// let spec = closed_form_q_spectrum(LatticeSize::new(4, 4)?);
/// assert_eq!(spec.len(), 32);
/// // the spectrum sums to the degree sum 12*n*m
/// assert!((spec.sum() - 192.0).abs() < 1e-9);
/// # Ok::<(), lattice_core::LatticeError>(())
/// ```
pub fn closed_form_q_spectrum(size: LatticeSize) -> ClosedFormSpectrum {
    enumerate(size, q_branch_pair)
}

/// Closed-form Laplacian spectrum of the Union Jack lattice: `2 n m`
/// nonnegative eigenvalues, with a single zero at the `(0, 0, -)` mode.
pub fn closed_form_l_spectrum(size: LatticeSize) -> ClosedFormSpectrum {
    enumerate(size, l_branch_pair)
}

/// Adjacency eigenvalues of the cycle C_n: `2 cos(2πi/n)` for `0 <= i < n`.
pub fn cycle_spectrum(n: usize) -> Result<Vec<f64>, LatticeError> {
    if n < LatticeSize::MIN_SIDE {
        return Err(LatticeError::CycleTooSmall(n));
    }
    Ok((0..n)
        .map(|i| 2.0 * (TAU * i as f64 / n as f64).cos())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(n: usize, m: usize) -> LatticeSize {
        LatticeSize::new(n, m).unwrap()
    }

    #[test]
    fn q_spectrum_zero_mode_is_eight_plus_minus_four_root_two() {
        let spec = closed_form_q_spectrum(size(5, 7));
        let plus = spec.entries()[0];
        let minus = spec.entries()[1];
        assert_eq!((plus.i, plus.j, plus.branch), (0, 0, Branch::Plus));
        assert_eq!(minus.branch, Branch::Minus);
        let root32 = 32f64.sqrt();
        assert!((plus.value - (8.0 + root32)).abs() < 1e-12);
        assert!((minus.value - (8.0 - root32)).abs() < 1e-12);
    }

    #[test]
    fn q_spectrum_pi_pi_mode_is_double_four() {
        // (n,m)=(4,4), (i,j)=(2,2) puts both angles at π: S=4, P=16,
        // discriminant 0, so 4 is a double eigenvalue.
        let spec = closed_form_q_spectrum(size(4, 4));
        let at = |i: usize, j: usize, b: Branch| {
            spec.entries()
                .iter()
                .find(|e| e.i == i && e.j == j && e.branch == b)
                .unwrap()
                .value
        };
        assert!((at(2, 2, Branch::Plus) - 4.0).abs() < 1e-12);
        assert!((at(2, 2, Branch::Minus) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn l_spectrum_zero_mode_pair() {
        let spec = closed_form_l_spectrum(size(6, 3));
        assert_eq!(spec.len(), 36);
        let plus = spec.entries()[0].value;
        let minus = spec.entries()[1].value;
        assert!((plus - 8.0).abs() < 1e-12);
        assert_eq!(minus, 0.0);
    }

    #[test]
    fn l_spectrum_has_exactly_one_zero() {
        let spec = closed_form_l_spectrum(size(5, 4));
        let zeros = spec
            .entries()
            .iter()
            .filter(|e| e.value.abs() <= 1e-12)
            .count();
        assert_eq!(zeros, 1);
        let zero = spec
            .entries()
            .iter()
            .find(|e| e.value.abs() <= 1e-12)
            .unwrap();
        assert_eq!((zero.i, zero.j, zero.branch), (0, 0, Branch::Minus));
    }

    #[test]
    fn l_spectrum_sum_is_degree_sum() {
        let spec = closed_form_l_spectrum(size(5, 4));
        let total = spec.sum();
        assert!((total - 12.0 * 20.0).abs() < 1e-9 * total);
    }

    #[test]
    fn q_spectrum_is_positive() {
        for (n, m) in [(3, 3), (4, 5), (8, 8)] {
            let spec = closed_form_q_spectrum(size(n, m));
            assert_eq!(spec.len(), 2 * n * m);
            assert!(spec.entries().iter().all(|e| e.value > 0.0));
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let spec = closed_form_q_spectrum(size(3, 4));
        let keys: Vec<_> = spec
            .entries()
            .iter()
            .map(|e| (e.i, e.j, e.branch))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn mode_symmetry_in_both_indices() {
        // Modes (i, j) and (n-i, j) share cos α, hence eigenvalues, up to
        // the roundoff of evaluating the two angles.
        let (n, m) = (7, 5);
        let spec = closed_form_q_spectrum(size(n, m));
        let value = |i: usize, j: usize, b: Branch| {
            spec.entries()
                .iter()
                .find(|e| e.i == i && e.j == j && e.branch == b)
                .unwrap()
                .value
        };
        for i in 1..n {
            for j in 1..m {
                for b in [Branch::Plus, Branch::Minus] {
                    assert!((value(i, j, b) - value(n - i, j, b)).abs() < 1e-12);
                    assert!((value(i, j, b) - value(i, m - j, b)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn cycle_spectrum_small_cases() {
        let c4 = cycle_spectrum(4).unwrap();
        let expected4 = [2.0, 0.0, -2.0, 0.0];
        for (got, want) in c4.iter().zip(expected4) {
            assert!((got - want).abs() < 1e-15);
        }

        let c3 = cycle_spectrum(3).unwrap();
        assert!((c3[0] - 2.0).abs() < 1e-15);
        assert!((c3[1] + 1.0).abs() < 1e-12);
        assert!((c3[2] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn cycle_spectrum_rejects_small_n() {
        assert_eq!(cycle_spectrum(2), Err(LatticeError::CycleTooSmall(2)));
    }

    #[test]
    fn csv_dump_shape() {
        let spec = closed_form_q_spectrum(size(3, 3));
        let csv = spec.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("i,j,sign,value"));
        assert_eq!(csv.lines().count(), 1 + 18);
        assert!(csv.lines().nth(1).unwrap().starts_with("0,0,+,"));
        assert!(csv.lines().nth(2).unwrap().starts_with("0,0,-,"));
    }

    #[test]
    fn discriminant_scan_over_dense_sizes() {
        // Q-discriminant stays above the clamp window and the L-discriminant
        // stays at 4 or more across all modes up to 32x32.
        for n in 3..=32usize {
            for m in 3..=32usize {
                for i in 0..n {
                    let ca = (TAU * i as f64 / n as f64).cos();
                    for j in 0..m {
                        let cb = (TAU * j as f64 / m as f64).cos();
                        let s = 6.0 + ca + cb;
                        let disc_q = s * s - 4.0 * (7.0 + ca + cb - ca * cb);
                        assert!(disc_q >= -1e-12);
                        let t = 6.0 - ca - cb;
                        let disc_l = t * t - 4.0 * (7.0 - 3.0 * ca - 3.0 * cb - ca * cb);
                        assert!(disc_l >= 4.0 - 1e-9);
                    }
                }
            }
        }
    }
}
