//! Output plumbing: number formatting, JSON fragments, and the
//! stdout-or-file sink.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::AppError;

/// 17-significant-digit rendering used for every floating-point value in
/// CSV and JSON output.
pub fn sig17(value: f64) -> String {
    format!("{value:.16e}")
}

/// Writes `content` to `out` when given, otherwise to stdout.
pub fn emit(out: Option<&Path>, content: &str) -> Result<(), AppError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| AppError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| AppError::Usage(format!("cannot write to stdout: {e}"))),
    }
}

/// `[a, b, ...]` with 17-significant-digit numbers.
pub fn json_number_array(values: &[f64]) -> String {
    let mut out = String::from("[");
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let _ = write!(out, "{}", sig17(*v));
    }
    out.push(']');
    out
}
