//! The four square-root integrands behind the asymptotic constants.

use spectra::{l_branch_pair, q_branch_pair};

/// Square root of one quadratic-root branch, as a function of the
/// continuous angles `(x, y)` on [0, 2π]²:
///
/// * `SqrtA` / `SqrtB`: the +/- branches of the signless-Laplacian pair,
/// * `SqrtC` / `SqrtD`: the +/- branches of the Laplacian pair.
///
/// All four are finite and nonnegative on the whole domain; `SqrtD`
/// touches zero at (0, 0) and its periodic images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegrandKind {
    SqrtA,
    SqrtB,
    SqrtC,
    SqrtD,
}

impl IntegrandKind {
    pub const ALL: [IntegrandKind; 4] = [
        IntegrandKind::SqrtA,
        IntegrandKind::SqrtB,
        IntegrandKind::SqrtC,
        IntegrandKind::SqrtD,
    ];

    pub fn eval(self, x: f64, y: f64) -> f64 {
        let (cos_x, cos_y) = (x.cos(), y.cos());
        match self {
            IntegrandKind::SqrtA => q_branch_pair(cos_x, cos_y).0.sqrt(),
            IntegrandKind::SqrtB => q_branch_pair(cos_x, cos_y).1.sqrt(),
            IntegrandKind::SqrtC => l_branch_pair(cos_x, cos_y).0.sqrt(),
            IntegrandKind::SqrtD => l_branch_pair(cos_x, cos_y).1.sqrt(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IntegrandKind::SqrtA => "sqrtA",
            IntegrandKind::SqrtB => "sqrtB",
            IntegrandKind::SqrtC => "sqrtC",
            IntegrandKind::SqrtD => "sqrtD",
        }
    }
}
