use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::matrix::{IncidenceMatrix, IntMatrix, SymmetricMatrix};

/// Dense zero-based vertex identifier.
pub type VertexId = usize;

/// An explicit undirected simple graph.
///
/// Edges are stored as unordered pairs normalized to `u < v` and kept in
/// lexicographic order, which fixes a deterministic edge ordering for the
/// incidence matrix and the edge-list export. Every vertex carries an opaque
/// provenance label such as `grid(r,c)` or `face(r,c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(VertexId, VertexId)>,
    degrees: Vec<usize>,
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Adjacency matrix A with zero diagonal and unit entries per edge.
    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        let mut a = SymmetricMatrix::zeros(self.vertex_count());
        for &(u, v) in &self.edges {
            a.set_sym(u, v, 1);
        }
        a
    }

    /// Diagonal matrix of vertex degrees.
    pub fn degree_matrix(&self) -> SymmetricMatrix {
        let mut d = SymmetricMatrix::zeros(self.vertex_count());
        for (v, &deg) in self.degrees.iter().enumerate() {
            d.set_sym(v, v, deg as i64);
        }
        d
    }

    /// Laplacian L = D - A. Row sums are zero.
    pub fn laplacian(&self) -> SymmetricMatrix {
        self.degree_matrix().sub(&self.adjacency_matrix())
    }

    /// Signless Laplacian Q = D + A.
    pub fn signless_laplacian(&self) -> SymmetricMatrix {
        self.degree_matrix().add(&self.adjacency_matrix())
    }

    /// Vertex-edge incidence matrix over the fixed lexicographic edge order.
    ///
    /// Satisfies `I * I^T = Q` exactly in integer arithmetic.
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut m = IntMatrix::zeros(self.vertex_count(), self.edge_count());
        for (col, &(u, v)) in self.edges.iter().enumerate() {
            m.set(u, col, 1);
            m.set(v, col, 1);
        }
        IncidenceMatrix::new(m)
    }

    /// Edge-list export: a `# vertices=<N> edges=<M>` header followed by one
    /// `u v` line per edge in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# vertices={} edges={}",
            self.vertex_count(),
            self.edge_count()
        );
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Accumulates labeled vertices and deduplicated edges, then freezes them
/// into an immutable [`Graph`]. Only the lattice builders construct graphs,
/// so malformed edges are programming errors and panic.
#[derive(Debug, Default)]
pub(crate) struct GraphBuilder {
    labels: Vec<String>,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub(crate) fn with_labels(labels: Vec<String>) -> Self {
        Self {
            labels,
            edges: BTreeSet::new(),
        }
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(
            u < self.labels.len() && v < self.labels.len(),
            "edge ({u}, {v}) references a vertex outside 0..{}",
            self.labels.len()
        );
        let key = if u < v { (u, v) } else { (v, u) };
        let fresh = self.edges.insert(key);
        assert!(fresh, "duplicate edge ({}, {})", key.0, key.1);
    }

    pub(crate) fn finish(self) -> Graph {
        let mut degrees = vec![0usize; self.labels.len()];
        for &(u, v) in &self.edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Graph {
            labels: self.labels,
            edges: self.edges.into_iter().collect(),
            degrees,
        }
    }
}
