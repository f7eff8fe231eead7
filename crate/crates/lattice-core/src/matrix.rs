//! Exact integer matrices for the structural identities.
//!
//! The adjacency, degree, Laplacian, signless-Laplacian, incidence, and
//! face-incidence matrices of the lattice builders satisfy their identities
//! in integer arithmetic, and the tests assert equality, not closeness.
//! Floating point enters only in the eigensolvers and quadrature built on
//! top.

/// Dense square integer matrix that is symmetric by construction: every
/// write goes through [`SymmetricMatrix::set_sym`], which mirrors the entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<i64>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            data: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set_sym(i, i, 1);
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.data[i * self.order..(i + 1) * self.order].iter().sum()
    }

    /// Diagonal entries in row order.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.order).map(|i| self.get(i, i)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "order mismatch in add");
        Self {
            order: self.order,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "order mismatch in sub");
        Self {
            order: self.order,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: i64) -> Self {
        Self {
            order: self.order,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    /// Row-major dense copy as floats, for handing to the eigensolver.
    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&v| v as f64).collect()
    }
}

/// Kronecker product of two symmetric integer matrices.
///
/// With `a` of order `p` and `b` of order `q`, the result has order `p * q`
/// and entries `(a ⊗ b)[(i*q + k), (j*q + l)] = a[i][j] * b[k][l]`.
pub fn kronecker(a: &SymmetricMatrix, b: &SymmetricMatrix) -> SymmetricMatrix {
    let p = a.order();
    let q = b.order();
    let mut out = SymmetricMatrix::zeros(p * q);
    for i in 0..p {
        for j in 0..=i {
            let aij = a.get(i, j);
            if aij == 0 {
                continue;
            }
            for k in 0..q {
                for l in 0..q {
                    let v = aij * b.get(k, l);
                    if v != 0 {
                        out.set_sym(i * q + k, j * q + l, v);
                    }
                }
            }
        }
    }
    out
}

/// Dense rectangular integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.data[i * self.cols..(i + 1) * self.cols].iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> i64 {
        (0..self.rows).map(|i| self.get(i, j)).sum()
    }

    /// Gram product `M * M^T`, assembled symmetrically.
    pub fn gram(&self) -> SymmetricMatrix {
        let mut out = SymmetricMatrix::zeros(self.rows);
        for i in 0..self.rows {
            for j in 0..=i {
                let mut acc = 0i64;
                for k in 0..self.cols {
                    acc += self.get(i, k) * self.get(j, k);
                }
                out.set_sym(i, j, acc);
            }
        }
        out
    }
}

/// Vertex-edge incidence matrix: one column per edge, with a 1 at each
/// endpoint. Produced only by [`crate::Graph::incidence_matrix`], so every
/// column has exactly two unit entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    inner: IntMatrix,
}

impl IncidenceMatrix {
    pub(crate) fn new(inner: IntMatrix) -> Self {
        Self { inner }
    }

    pub fn rows(&self) -> usize {
        self.inner.rows()
    }

    pub fn cols(&self) -> usize {
        self.inner.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.inner.get(i, j)
    }

    pub fn col_sum(&self, j: usize) -> i64 {
        self.inner.col_sum(j)
    }

    /// `I * I^T`, which equals the signless Laplacian of the source graph.
    pub fn gram(&self) -> SymmetricMatrix {
        self.inner.gram()
    }
}
