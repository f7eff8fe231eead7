use std::fmt;

use crate::error::LatticeError;

/// Validated torus dimensions: `n` columns (length of the horizontal cycle)
/// and `m` rows (length of the vertical cycle).
///
/// Both sides must be at least 3; smaller tori wrap an edge onto its own
/// endpoints or duplicate edges, which the builders do not allow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeSize {
    n: usize,
    m: usize,
}

impl LatticeSize {
    /// Smallest admissible side length.
    pub const MIN_SIDE: usize = 3;

    pub fn new(n: usize, m: usize) -> Result<Self, LatticeError> {
        if n < Self::MIN_SIDE || m < Self::MIN_SIDE {
            return Err(LatticeError::SizeTooSmall { n, m });
        }
        Ok(Self { n, m })
    }

    /// Number of columns (cycle length of the horizontal cycle).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows (cycle length of the vertical cycle).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of grid sites `n * m` on the underlying torus grid.
    pub fn sites(&self) -> usize {
        self.n * self.m
    }

    /// The same dimensions with the roles of rows and columns exchanged.
    pub fn transposed(&self) -> Self {
        Self {
            n: self.m,
            m: self.n,
        }
    }
}

impl fmt::Display for LatticeSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.n, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_minimum_size() {
        let s = LatticeSize::new(3, 3).unwrap();
        assert_eq!((s.n(), s.m()), (3, 3));
        assert_eq!(s.sites(), 9);
    }

    #[test]
    fn rejects_small_sides() {
        assert_eq!(
            LatticeSize::new(2, 5),
            Err(LatticeError::SizeTooSmall { n: 2, m: 5 })
        );
        assert_eq!(
            LatticeSize::new(4, 0),
            Err(LatticeError::SizeTooSmall { n: 4, m: 0 })
        );
    }

    #[test]
    fn display_is_nxm() {
        assert_eq!(LatticeSize::new(4, 7).unwrap().to_string(), "4x7");
    }
}
