//! Asymptotic per-site/per-cell constants of the energy invariants, and the
//! finite-size convergence study toward them.

use std::fmt::Write as _;

use invariants::{invariant, InvariantKind, Method};
use lattice_core::LatticeSize;

use crate::integrand::IntegrandKind;
use crate::quadrature::{integrate2d, QuadError, QuadratureResult, DOMAIN_AREA};

/// Mean of the chosen integrand over the angle torus: the raw double
/// integral over [0, 2π]² divided by the domain area 4π². The requested
/// tolerance applies to this normalized value.
pub fn component_integral(kind: IntegrandKind, tol: f64) -> Result<QuadratureResult, QuadError> {
    let raw = integrate2d(|x, y| kind.eval(x, y), tol * DOMAIN_AREA)?;
    Ok(QuadratureResult {
        value: raw.value / DOMAIN_AREA,
        error_estimate: raw.error_estimate / DOMAIN_AREA,
        evaluations: raw.evaluations,
        converged: raw.converged,
    })
}

/// Asymptotic incidence-energy constant: the sum of the `SqrtA` and `SqrtB`
/// component means, i.e. the limit of IE(n,m) / (n·m) as n, m grow.
///
/// ```
/// let c = asymptotics::ie_constant(1e-6)?;
/// assert!((c - 4.7385).abs() < 1e-3);
/// # Ok::<(), asymptotics::QuadError>(())
/// ```
pub fn ie_constant(tol: f64) -> Result<f64, QuadError> {
    let a = component_integral(IntegrandKind::SqrtA, tol / 2.0)?;
    let b = component_integral(IntegrandKind::SqrtB, tol / 2.0)?;
    Ok(a.value + b.value)
}

/// Asymptotic LEL constant: the sum of the `SqrtC` and `SqrtD` component
/// means, i.e. the limit of LEL(n,m) / (n·m).
pub fn lel_constant(tol: f64) -> Result<f64, QuadError> {
    let c = component_integral(IntegrandKind::SqrtC, tol / 2.0)?;
    let d = component_integral(IntegrandKind::SqrtD, tol / 2.0)?;
    Ok(c.value + d.value)
}

/// All four component integrals at a shared tolerance, plus the derived
/// constants in both reporting conventions.
///
/// Naming follows the report schema: `*_per_site` is the plain component
/// sum — the limit of invariant/(n·m) — and `*_per_cell` is twice that.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConstants {
    pub sqrt_a: QuadratureResult,
    pub sqrt_b: QuadratureResult,
    pub sqrt_c: QuadratureResult,
    pub sqrt_d: QuadratureResult,
    pub tolerance: f64,
}

impl AsymptoticConstants {
    /// Evaluates every component at `tol / 2` so each pairwise sum meets
    /// `tol`.
    pub fn compute(tol: f64) -> Result<Self, QuadError> {
        Ok(Self {
            sqrt_a: component_integral(IntegrandKind::SqrtA, tol / 2.0)?,
            sqrt_b: component_integral(IntegrandKind::SqrtB, tol / 2.0)?,
            sqrt_c: component_integral(IntegrandKind::SqrtC, tol / 2.0)?,
            sqrt_d: component_integral(IntegrandKind::SqrtD, tol / 2.0)?,
            tolerance: tol,
        })
    }

    pub fn component(&self, kind: IntegrandKind) -> QuadratureResult {
        match kind {
            IntegrandKind::SqrtA => self.sqrt_a,
            IntegrandKind::SqrtB => self.sqrt_b,
            IntegrandKind::SqrtC => self.sqrt_c,
            IntegrandKind::SqrtD => self.sqrt_d,
        }
    }

    /// lim IE(n,m) / (n·m).
    pub fn ie_per_site(&self) -> f64 {
        self.sqrt_a.value + self.sqrt_b.value
    }

    /// lim LEL(n,m) / (n·m).
    pub fn lel_per_site(&self) -> f64 {
        self.sqrt_c.value + self.sqrt_d.value
    }

    /// 2 × [`Self::ie_per_site`].
    pub fn ie_per_cell(&self) -> f64 {
        2.0 * self.ie_per_site()
    }

    /// 2 × [`Self::lel_per_site`].
    pub fn lel_per_cell(&self) -> f64 {
        2.0 * self.lel_per_site()
    }

    pub fn evaluations(&self) -> u64 {
        self.sqrt_a.evaluations
            + self.sqrt_b.evaluations
            + self.sqrt_c.evaluations
            + self.sqrt_d.evaluations
    }

    pub fn converged(&self) -> bool {
        self.sqrt_a.converged
            && self.sqrt_b.converged
            && self.sqrt_c.converged
            && self.sqrt_d.converged
    }

    /// Constants report as a single JSON object, numbers at 17 significant
    /// digits.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{");
        let _ = write!(out, "\"sqrtA\":{:.16e},", self.sqrt_a.value);
        let _ = write!(out, "\"sqrtB\":{:.16e},", self.sqrt_b.value);
        let _ = write!(out, "\"sqrtC\":{:.16e},", self.sqrt_c.value);
        let _ = write!(out, "\"sqrtD\":{:.16e},", self.sqrt_d.value);
        let _ = write!(out, "\"ie_per_site\":{:.16e},", self.ie_per_site());
        let _ = write!(out, "\"lel_per_site\":{:.16e},", self.lel_per_site());
        let _ = write!(out, "\"ie_per_cell\":{:.16e},", self.ie_per_cell());
        let _ = write!(out, "\"lel_per_cell\":{:.16e},", self.lel_per_cell());
        let _ = write!(out, "\"tolerance\":{:.16e},", self.tolerance);
        let _ = write!(out, "\"evaluations\":{}", self.evaluations());
        out.push('}');
        out
    }

    /// Same report as CSV: one header row, one data row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "sqrtA,sqrtB,sqrtC,sqrtD,ie_per_site,lel_per_site,ie_per_cell,lel_per_cell,tolerance,evaluations\n",
        );
        let _ = writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}",
            self.sqrt_a.value,
            self.sqrt_b.value,
            self.sqrt_c.value,
            self.sqrt_d.value,
            self.ie_per_site(),
            self.lel_per_site(),
            self.ie_per_cell(),
            self.lel_per_cell(),
            self.tolerance,
            self.evaluations()
        );
        out
    }
}

/// One finite-size data point of the convergence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub size: LatticeSize,
    /// Closed-form invariant divided by 2·n·m.
    pub per_site: f64,
    /// |per_site − per-site limit|.
    pub gap_to_limit: f64,
}

/// Finite-size per-site values against the quadrature limit.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub kind: InvariantKind,
    /// The per-site limit the rows converge to: half the headline constant,
    /// since per_site divides by 2·n·m while the constant is per n·m.
    pub per_site_limit: f64,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    pub fn csv_header() -> &'static str {
        "n,m,per_site,gap_to_limit"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::csv_header());
        out.push('\n');
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{:.16e},{:.16e}",
                row.size.n(),
                row.size.m(),
                row.per_site,
                row.gap_to_limit
            );
        }
        out
    }
}

/// Tolerance used for the quadrature limit inside the convergence study;
/// tight enough that the limit error never shows against the finite-size
/// gaps this study reports.
const LIMIT_TOL: f64 = 1e-8;

/// Per-site closed-form values for each size, with gaps to the per-site
/// quadrature limit, in input order.
pub fn convergence_study(
    kind: InvariantKind,
    sizes: &[LatticeSize],
) -> Result<ConvergenceTable, QuadError> {
    let constant = match kind {
        InvariantKind::IncidenceEnergy => ie_constant(LIMIT_TOL)?,
        InvariantKind::Lel => lel_constant(LIMIT_TOL)?,
    };
    let per_site_limit = constant / 2.0;
    let rows = sizes
        .iter()
        .map(|&size| {
            let report =
                invariant(size, kind, Method::ClosedForm).expect("closed form cannot fail");
            ConvergenceRow {
                size,
                per_site: report.per_site,
                gap_to_limit: (report.per_site - per_site_limit).abs(),
            }
        })
        .collect();
    Ok(ConvergenceTable {
        kind,
        per_site_limit,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_study_has_no_rows() {
        let table = convergence_study(InvariantKind::IncidenceEnergy, &[]).unwrap();
        assert!(table.rows.is_empty());
        assert!(table.per_site_limit > 0.0);
    }

    #[test]
    fn json_report_has_expected_keys() {
        let constants = AsymptoticConstants::compute(1e-3).unwrap();
        let json = constants.to_json();
        for key in [
            "\"sqrtA\":",
            "\"sqrtB\":",
            "\"sqrtC\":",
            "\"sqrtD\":",
            "\"ie_per_site\":",
            "\"lel_per_site\":",
            "\"ie_per_cell\":",
            "\"lel_per_cell\":",
            "\"tolerance\":",
            "\"evaluations\":",
        ] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
        assert!(json.starts_with('{') && json.ends_with('}'));
    }

    #[test]
    fn per_cell_doubles_per_site() {
        let constants = AsymptoticConstants::compute(1e-3).unwrap();
        assert_eq!(constants.ie_per_cell(), 2.0 * constants.ie_per_site());
        assert_eq!(constants.lel_per_cell(), 2.0 * constants.lel_per_site());
    }
}
