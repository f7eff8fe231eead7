//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! The self-contained, independent oracle the closed forms are checked
//! against: plane rotations annihilate each off-diagonal entry in turn
//! until the off-diagonal Frobenius norm drops below a relative threshold.
//! Convergence is unconditional for symmetric input; the sweep cap only
//! guards against NaN poisoning.

use lattice_core::SymmetricMatrix;

use crate::error::SpectraError;

/// Tuning knobs for the Jacobi solver.
#[derive(Debug, Clone)]
pub struct JacobiOptions {
    /// Largest matrix order accepted (dense cost grows cubically).
    pub order_cap: usize,
    /// Maximum number of full sweeps over the off-diagonal entries.
    pub max_sweeps: usize,
    /// Convergence threshold, relative to the initial Frobenius norm.
    pub rel_tol: f64,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self {
            order_cap: 2048,
            max_sweeps: 100,
            rel_tol: 1e-12,
        }
    }
}

/// Eigenvalues from the numeric solver, sorted ascending, plus the largest
/// entry of `A V - V Λ` as a residual diagnostic.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericSpectrum {
    values: Vec<f64>,
    residual: f64,
}

impl NumericSpectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// All eigenvalues of a symmetric matrix with default options.
pub fn numeric_spectrum(matrix: &SymmetricMatrix) -> Result<NumericSpectrum, SpectraError> {
    numeric_spectrum_with(matrix, &JacobiOptions::default())
}

/// All eigenvalues of a symmetric matrix with explicit options.
pub fn numeric_spectrum_with(
    matrix: &SymmetricMatrix,
    opts: &JacobiOptions,
) -> Result<NumericSpectrum, SpectraError> {
    let n = matrix.order();
    if n > opts.order_cap {
        return Err(SpectraError::OrderCap {
            order: n,
            cap: opts.order_cap,
        });
    }
    if n == 0 {
        return Ok(NumericSpectrum {
            values: Vec::new(),
            residual: 0.0,
        });
    }

    let original = matrix.to_f64();
    let mut a = original.clone();
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = opts.rel_tol * frobenius;

    let mut converged = false;
    let mut sweeps = 0;
    let mut off_norm = off_diagonal_norm(&a, n);
    while sweeps < opts.max_sweeps {
        if off_norm <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps += 1;
        off_norm = off_diagonal_norm(&a, n);
    }
    if !converged && off_norm > threshold {
        return Err(SpectraError::NoConvergence {
            off_norm,
            threshold,
            sweeps,
        });
    }

    let eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let residual = residual_norm(&original, &v, &eigenvalues, n);

    let mut values = eigenvalues;
    values.sort_by(f64::total_cmp);
    Ok(NumericSpectrum { values, residual })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[i * n + j] * a[i * n + j];
            }
        }
    }
    acc.sqrt()
}

/// One Jacobi rotation zeroing `a[p][q]`, mirrored into the full storage,
/// with the eigenvector accumulator updated alongside.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    let app = a[p * n + p];
    let aqq = a[q * n + q];
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = akp - s * (akq + tau * akp);
        let new_kq = akq + s * (akp - tau * akq);
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp - s * (vkq + tau * vkp);
        v[k * n + q] = vkq + s * (vkp - tau * vkq);
    }
}

/// max |(A V - V Λ)[i][k]| over all entries.
fn residual_norm(a: &[f64], v: &[f64], lambda: &[f64], n: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for k in 0..n {
        for i in 0..n {
            let mut av = 0.0;
            for j in 0..n {
                av += a[i * n + j] * v[j * n + k];
            }
            worst = worst.max((av - lambda[k] * v[i * n + k]).abs());
        }
    }
    worst
}
