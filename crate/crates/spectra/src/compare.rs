use crate::error::SpectraError;

/// Outcome of comparing two eigenvalue multisets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumComparison {
    /// Largest elementwise gap between the sorted multisets.
    pub max_abs_diff: f64,
    pub pass: bool,
}

/// Compares two eigenvalue multisets of equal length: sorts copies of both
/// and reports the largest elementwise absolute difference, passing when it
/// stays within `tol`.
pub fn compare_spectra(a: &[f64], b: &[f64], tol: f64) -> Result<SpectrumComparison, SpectraError> {
    if a.len() != b.len() {
        return Err(SpectraError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(f64::total_cmp);
    sb.sort_by(f64::total_cmp);
    let max_abs_diff = sa
        .iter()
        .zip(&sb)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0f64, f64::max);
    Ok(SpectrumComparison {
        max_abs_diff,
        pass: max_abs_diff <= tol,
    })
}
