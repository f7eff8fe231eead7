/// Compensated accumulator (Kahan–Babuška–Neumaier).
///
/// The invariant sums run over up to ~10^4 square-root terms and must be
/// reproducible bit for bit, so every summation in this crate goes through
/// this accumulator in a fixed order. The Neumaier branch also keeps the
/// compensation correct when a term exceeds the running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}
