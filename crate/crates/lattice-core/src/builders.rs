//! Builders for the three toroidal lattice families and their incidence
//! structures.
//!
//! Vertex labeling is fixed so the Kronecker-structured matrix identities
//! hold literally, without any permutation bookkeeping:
//!
//! * grid vertex `grid(r,c)` gets id `r*n + c` (row-major, `r < m`, `c < n`),
//! * face vertex `face(r,c)` gets id `n*m + r*n + c`, its quadrangle having
//!   corners `(r,c)`, `(r,c+1)`, `(r+1,c)`, `(r+1,c+1)` modulo `(m,n)`.

use crate::error::LatticeError;
use crate::graph::{Graph, GraphBuilder, VertexId};
use crate::matrix::IntMatrix;
use crate::size::LatticeSize;

/// The quadrangular faces of the torus grid, indexed row-major by `(r, c)`.
///
/// Face `(r, c)` lists its four corner grid-vertex ids in the order
/// `(r,c)`, `(r,c+1)`, `(r+1,c)`, `(r+1,c+1)` (indices wrapped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStructure {
    size: LatticeSize,
    faces: Vec<[VertexId; 4]>,
}

impl FaceStructure {
    pub fn size(&self) -> LatticeSize {
        self.size
    }

    pub fn faces(&self) -> &[[VertexId; 4]] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }
}

/// A truncated-square lattice together with its face boundaries.
///
/// `faces` holds one closed boundary walk per face: first the `n*m`
/// quadrangles (one per cell, row-major), then the `n*m` octagons. The dual
/// construction consumes this annotation, so it is kept alongside the graph.
#[derive(Debug, Clone)]
pub struct Lattice488 {
    pub graph: Graph,
    pub faces: Vec<Vec<VertexId>>,
}

fn wrap(i: usize, len: usize) -> usize {
    (i + 1) % len
}

/// Cycle graph C_n: vertices `0..n`, edges `(i, i+1 mod n)`.
pub fn build_cycle(n: usize) -> Result<Graph, LatticeError> {
    if n < LatticeSize::MIN_SIDE {
        return Err(LatticeError::CycleTooSmall(n));
    }
    let labels = (0..n).map(|i| format!("cycle({i})")).collect();
    let mut b = GraphBuilder::with_labels(labels);
    for i in 0..n {
        b.add_edge(i, wrap(i, n));
    }
    Ok(b.finish())
}

/// Torus grid: the Cartesian product of the column cycle C_n and the row
/// cycle C_m. `n*m` vertices, `2*n*m` edges, 4-regular.
///
/// Under the row-major labeling its adjacency matrix equals
/// `E_m ⊗ A(C_n) + A(C_m) ⊗ E_n` entry for entry.
pub fn build_torus_grid(size: LatticeSize) -> Graph {
    let (n, m) = (size.n(), size.m());
    let labels = (0..m)
        .flat_map(|r| (0..n).map(move |c| format!("grid({r},{c})")))
        .collect();
    let mut b = GraphBuilder::with_labels(labels);
    let id = |r: usize, c: usize| r * n + c;
    for r in 0..m {
        for c in 0..n {
            b.add_edge(id(r, c), id(r, wrap(c, n)));
            b.add_edge(id(r, c), id(wrap(r, m), c));
        }
    }
    b.finish()
}

/// Union Jack lattice: the torus grid plus one vertex per quadrangular face,
/// joined to the face's four corners. `2*n*m` vertices (grid degree 8, face
/// degree 4) and `6*n*m` edges.
///
/// ```
/// use lattice_core::{build_union_jack, LatticeSize};
///
/// let (graph, faces) = build_union_jack(LatticeSize::new(3, 3)?);
/// assert_eq!(graph.vertex_count(), 18);
/// assert_eq!(graph.edge_count(), 54);
/// assert_eq!(faces.face_count(), 9);
/// # Ok::<(), lattice_core::LatticeError>(())
/// ```
pub fn build_union_jack(size: LatticeSize) -> (Graph, FaceStructure) {
    let (n, m) = (size.n(), size.m());
    let sites = size.sites();
    let mut labels: Vec<String> = (0..m)
        .flat_map(|r| (0..n).map(move |c| format!("grid({r},{c})")))
        .collect();
    labels.extend((0..m).flat_map(|r| (0..n).map(move |c| format!("face({r},{c})"))));

    let mut b = GraphBuilder::with_labels(labels);
    let grid = |r: usize, c: usize| r * n + c;
    for r in 0..m {
        for c in 0..n {
            b.add_edge(grid(r, c), grid(r, wrap(c, n)));
            b.add_edge(grid(r, c), grid(wrap(r, m), c));
        }
    }

    let mut faces = Vec::with_capacity(sites);
    for r in 0..m {
        for c in 0..n {
            let corners = [
                grid(r, c),
                grid(r, wrap(c, n)),
                grid(wrap(r, m), c),
                grid(wrap(r, m), wrap(c, n)),
            ];
            let face_vertex = sites + r * n + c;
            for corner in corners {
                b.add_edge(face_vertex, corner);
            }
            faces.push(corners);
        }
    }

    (b.finish(), FaceStructure { size, faces })
}

// Corner offsets of the quadrangle that replaces each grid site of the
// truncated-square lattice. Cell (r, c) owns vertices 4*(r*n+c) + {N,E,S,W}.
const CORNER_N: usize = 0;
const CORNER_E: usize = 1;
const CORNER_S: usize = 2;
const CORNER_W: usize = 3;

/// Truncated-square (4.8.8) lattice on the torus: each grid site becomes a
/// quadrangle of four vertices, adjacent quadrangles joined corner to
/// corner. `4*n*m` vertices, `6*n*m` edges, 3-regular; the faces are `n*m`
/// quadrangles and `n*m` octagons, recorded for the dual construction.
pub fn build_488(size: LatticeSize) -> Lattice488 {
    let (n, m) = (size.n(), size.m());
    const CORNER_NAMES: [char; 4] = ['n', 'e', 's', 'w'];
    let labels = (0..m)
        .flat_map(|r| {
            (0..n).flat_map(move |c| {
                CORNER_NAMES
                    .iter()
                    .map(move |&k| format!("cell({r},{c}):{k}"))
            })
        })
        .collect();

    let v = move |r: usize, c: usize, corner: usize| 4 * (r * n + c) + corner;
    let mut b = GraphBuilder::with_labels(labels);
    for r in 0..m {
        for c in 0..n {
            // the quadrangle ring
            b.add_edge(v(r, c, CORNER_N), v(r, c, CORNER_E));
            b.add_edge(v(r, c, CORNER_E), v(r, c, CORNER_S));
            b.add_edge(v(r, c, CORNER_S), v(r, c, CORNER_W));
            b.add_edge(v(r, c, CORNER_W), v(r, c, CORNER_N));
            // links to the next quadrangle along each axis
            b.add_edge(v(r, c, CORNER_E), v(r, wrap(c, n), CORNER_W));
            b.add_edge(v(r, c, CORNER_N), v(wrap(r, m), c, CORNER_S));
        }
    }

    let mut faces = Vec::with_capacity(2 * size.sites());
    for r in 0..m {
        for c in 0..n {
            faces.push(vec![
                v(r, c, CORNER_N),
                v(r, c, CORNER_E),
                v(r, c, CORNER_S),
                v(r, c, CORNER_W),
            ]);
        }
    }
    for r in 0..m {
        for c in 0..n {
            let (r1, c1) = (wrap(r, m), wrap(c, n));
            faces.push(vec![
                v(r, c, CORNER_E),
                v(r, c1, CORNER_W),
                v(r, c1, CORNER_N),
                v(r1, c1, CORNER_S),
                v(r1, c1, CORNER_W),
                v(r1, c, CORNER_E),
                v(r1, c, CORNER_S),
                v(r, c, CORNER_N),
            ]);
        }
    }

    Lattice488 {
        graph: b.finish(),
        faces,
    }
}

/// Dual graph of an annotated 4.8.8 lattice: one vertex per face, one edge
/// per primal edge between the two faces it separates.
///
/// Fails if the face annotation does not cover every primal edge exactly
/// twice, or if it would force a loop or parallel edge.
pub fn dual_of_488(lattice: &Lattice488) -> Result<Graph, LatticeError> {
    let graph = &lattice.graph;
    if lattice.faces.is_empty() {
        return Err(LatticeError::FaceAnnotation(
            "no faces recorded".to_string(),
        ));
    }

    let edge_index = |u: VertexId, v: VertexId| -> Result<usize, LatticeError> {
        let key = if u < v { (u, v) } else { (v, u) };
        graph.edges().binary_search(&key).map_err(|_| {
            LatticeError::FaceAnnotation(format!("face boundary uses non-edge ({u}, {v})"))
        })
    };

    // For every primal edge, the (at most two) faces bordering it.
    let mut bordering: Vec<Vec<usize>> = vec![Vec::new(); graph.edge_count()];
    for (face_id, boundary) in lattice.faces.iter().enumerate() {
        if boundary.len() < 3 {
            return Err(LatticeError::FaceAnnotation(format!(
                "face {face_id} has fewer than 3 boundary vertices"
            )));
        }
        for i in 0..boundary.len() {
            let u = boundary[i];
            let v = boundary[(i + 1) % boundary.len()];
            let e = edge_index(u, v)?;
            if bordering[e].len() == 2 {
                return Err(LatticeError::FaceAnnotation(format!(
                    "edge ({u}, {v}) borders more than two faces"
                )));
            }
            bordering[e].push(face_id);
        }
    }

    let labels = (0..lattice.faces.len())
        .map(|f| {
            let sides = lattice.faces[f].len();
            format!("dualface({f}):{sides}-gon")
        })
        .collect();
    let mut b = GraphBuilder::with_labels(labels);
    for (e, faces) in bordering.iter().enumerate() {
        let &[f1, f2] = faces.as_slice() else {
            let (u, v) = graph.edges()[e];
            return Err(LatticeError::FaceAnnotation(format!(
                "edge ({u}, {v}) borders {} faces, expected 2",
                faces.len()
            )));
        };
        if f1 == f2 {
            return Err(LatticeError::FaceAnnotation(format!(
                "edge {e} separates face {f1} from itself"
            )));
        }
        b.add_edge(f1, f2);
    }
    Ok(b.finish())
}

/// Grid-vertex x face incidence matrix M of the torus grid: `n*m` rows and
/// `n*m` columns, entry 1 where the vertex is a corner of the face.
///
/// Under the row-major labeling, `M * M^T` equals
/// `(2E_m + A(C_m)) ⊗ (2E_n + A(C_n))` exactly.
pub fn face_vertex_incidence(size: LatticeSize) -> IntMatrix {
    let (_, faces) = build_union_jack(size);
    let sites = size.sites();
    let mut m = IntMatrix::zeros(sites, sites);
    for (face_id, corners) in faces.faces().iter().enumerate() {
        for &corner in corners {
            m.set(corner, face_id, 1);
        }
    }
    m
}
