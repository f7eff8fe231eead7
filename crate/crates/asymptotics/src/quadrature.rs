//! Adaptive tensor-Gauss quadrature over the angle torus [0, 2π]².
//!
//! Panels are bisected in both directions until the rule-pair error
//! estimate fits a budget proportional to panel area. The domain starts
//! pre-split at x = π and y = π so the square-root kink of the
//! signless-Laplacian discriminant at (π, π) and the conical point of the
//! small Laplacian branch at (0, 0) and its periodic images all sit on
//! panel corners, where the open Gauss rules never place a node.

use std::f64::consts::TAU;

use thiserror::Error;

use crate::gauss::GaussLegendre;
use invariants::KahanSum;

/// Full integration domain: the angle square [0, 2π]².
pub const DOMAIN_AREA: f64 = TAU * TAU;

/// Bisection depth cap; a panel at depth 30 is ~2^-30 of the side length.
pub const MAX_DEPTH: u32 = 30;

const HIGH_ORDER: usize = 7;
const LOW_ORDER: usize = 5;

/// Errors from the 2D quadrature driver.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadError {
    #[error("quadrature tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    /// The integrand produced NaN or ±inf; the offending point is reported.
    #[error("integrand returned a non-finite value at ({x}, {y})")]
    NonFinite { x: f64, y: f64 },
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Accumulated rule-pair error estimate; at or below the requested
    /// tolerance whenever `converged` is set.
    pub error_estimate: f64,
    /// Number of integrand evaluations.
    pub evaluations: u64,
    /// False only if the depth cap forced panels through with estimates
    /// above their budget.
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    depth: u32,
}

impl Panel {
    fn new(x0: f64, x1: f64, y0: f64, y1: f64, depth: u32) -> Self {
        Self {
            x0,
            x1,
            y0,
            y1,
            depth,
        }
    }

    fn area(&self) -> f64 {
        (self.x1 - self.x0) * (self.y1 - self.y0)
    }
}

/// Integrates `f` over [0, 2π]² to absolute tolerance `tol`.
///
/// Deterministic: panels are processed in a fixed depth-first order and the
/// accumulation is compensated, so identical calls give identical bits.
pub fn integrate2d<F>(f: F, tol: f64) -> Result<QuadratureResult, QuadError>
where
    F: Fn(f64, f64) -> f64,
{
    if !tol.is_finite() || tol <= 0.0 {
        return Err(QuadError::InvalidTolerance(tol));
    }
    let high = GaussLegendre::new(HIGH_ORDER);
    let low = GaussLegendre::new(LOW_ORDER);

    let mid = TAU / 2.0;
    let mut stack = vec![
        Panel::new(0.0, mid, 0.0, mid, 0),
        Panel::new(mid, TAU, 0.0, mid, 0),
        Panel::new(0.0, mid, mid, TAU, 0),
        Panel::new(mid, TAU, mid, TAU, 0),
    ];

    let mut value = KahanSum::new();
    let mut error = KahanSum::new();
    let mut evaluations: u64 = 0;
    let mut depth_capped = false;

    while let Some(panel) = stack.pop() {
        let (high_value, low_value) = panel_pair(&f, &panel, &high, &low, &mut evaluations)?;
        let estimate = (high_value - low_value).abs();
        let budget = tol * panel.area() / DOMAIN_AREA;
        if estimate <= budget || panel.depth >= MAX_DEPTH {
            if estimate > budget {
                depth_capped = true;
            }
            value.add(high_value);
            error.add(estimate);
            continue;
        }
        let xm = 0.5 * (panel.x0 + panel.x1);
        let ym = 0.5 * (panel.y0 + panel.y1);
        let d = panel.depth + 1;
        stack.push(Panel::new(panel.x0, xm, panel.y0, ym, d));
        stack.push(Panel::new(xm, panel.x1, panel.y0, ym, d));
        stack.push(Panel::new(panel.x0, xm, ym, panel.y1, d));
        stack.push(Panel::new(xm, panel.x1, ym, panel.y1, d));
    }

    let error_estimate = error.value();
    let converged = !depth_capped && error_estimate <= tol;
    Ok(QuadratureResult {
        value: value.value(),
        error_estimate,
        evaluations,
        converged,
    })
}

/// Tensor rule values of both orders on one panel.
fn panel_pair<F>(
    f: &F,
    panel: &Panel,
    high: &GaussLegendre,
    low: &GaussLegendre,
    evaluations: &mut u64,
) -> Result<(f64, f64), QuadError>
where
    F: Fn(f64, f64) -> f64,
{
    let hi = tensor_rule(f, panel, high, evaluations)?;
    let lo = tensor_rule(f, panel, low, evaluations)?;
    Ok((hi, lo))
}

fn tensor_rule<F>(
    f: &F,
    panel: &Panel,
    rule: &GaussLegendre,
    evaluations: &mut u64,
) -> Result<f64, QuadError>
where
    F: Fn(f64, f64) -> f64,
{
    let cx = 0.5 * (panel.x0 + panel.x1);
    let cy = 0.5 * (panel.y0 + panel.y1);
    let hx = 0.5 * (panel.x1 - panel.x0);
    let hy = 0.5 * (panel.y1 - panel.y0);
    let mut acc = KahanSum::new();
    for (&xi, &wx) in rule.nodes().iter().zip(rule.weights()) {
        let x = cx + hx * xi;
        for (&eta, &wy) in rule.nodes().iter().zip(rule.weights()) {
            let y = cy + hy * eta;
            let v = f(x, y);
            *evaluations += 1;
            if !v.is_finite() {
                return Err(QuadError::NonFinite { x, y });
            }
            acc.add(wx * wy * v);
        }
    }
    Ok(acc.value() * hx * hy)
}
