//! Combinatorial-map representation of sphere triangulations.
//!
//! A triangulation is stored as a rotation system: for every vertex, the
//! cyclic order of its neighbors as seen clockwise on the sphere. Faces are
//! derived by tracing: the directed edge `u -> v` is followed by `v -> w`
//! where `w` is the successor of `u` in the rotation of `v`. With a
//! consistently oriented rotation table this closes every directed edge into
//! exactly one triangular face.

use std::fmt;

use thiserror::Error;

/// Dense vertex index, stable within one triangulation only.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unordered pair of distinct vertices, stored with the smaller index first.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Panics if `u == v`; loops are never meaningful here.
    pub fn new(u: VertexId, v: VertexId) -> Edge {
        assert!(u != v, "edge endpoints must be distinct: {u}");
        if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    /// Endpoints in ascending index order.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// A traced face: vertex triple in trace orientation.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Face {
    vertices: [VertexId; 3],
}

impl Face {
    pub fn vertices(&self) -> [VertexId; 3] {
        self.vertices
    }

    /// The three vertices in ascending order (orientation-independent key).
    pub fn sorted_vertices(&self) -> [VertexId; 3] {
        let mut v = self.vertices;
        v.sort();
        v
    }

    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.vertices;
        [Edge::new(a, b), Edge::new(b, c), Edge::new(c, a)]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        write!(f, "({a} {b} {c})")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("a sphere triangulation needs at least 4 vertices, got {n}")]
    TooFewVertices { n: usize },
    #[error("vertex {vertex} lists neighbor {neighbor} outside 0..{n}")]
    NeighborOutOfRange {
        vertex: VertexId,
        neighbor: usize,
        n: usize,
    },
    #[error("vertex {vertex} has a loop or repeated neighbor in its rotation")]
    NotSimple { vertex: VertexId },
    #[error("vertex {from} lists {to} but not vice versa")]
    NotSymmetric { from: VertexId, to: VertexId },
    #[error("vertex {vertex} has degree {degree}, minimum is 3")]
    DegreeTooLow { vertex: VertexId, degree: usize },
    #[error("edge count {edges} violates E = 3n - 6 = {expected}")]
    EulerViolation { edges: usize, expected: usize },
    #[error("face traced from {from} -> {to} has length {len}, expected a triangle")]
    NotTriangular {
        from: VertexId,
        to: VertexId,
        len: usize,
    },
}

/// An immutable, validated triangulation of the 2-sphere.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlaneTriangulation {
    rotation: Vec<Vec<VertexId>>,
}

impl PlaneTriangulation {
    /// Validates a rotation table and wraps it. Checks, in order: vertex
    /// count, neighbor ranges, simplicity, symmetry, minimum degree, the
    /// edge count E = 3n - 6, and that face tracing closes every directed
    /// edge into a triangle. The last two together force a connected,
    /// genus-zero map, so nothing else needs checking.
    pub fn build(rotation: Vec<Vec<usize>>) -> Result<PlaneTriangulation, BuildError> {
        let n = rotation.len();
        if n < 4 {
            return Err(BuildError::TooFewVertices { n });
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            for &u in nbrs {
                if u >= n {
                    return Err(BuildError::NeighborOutOfRange {
                        vertex: VertexId(v),
                        neighbor: u,
                        n,
                    });
                }
            }
            let mut seen = vec![false; n];
            for &u in nbrs {
                if u == v || seen[u] {
                    return Err(BuildError::NotSimple { vertex: VertexId(v) });
                }
                seen[u] = true;
            }
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            for &u in nbrs {
                if !rotation[u].contains(&v) {
                    return Err(BuildError::NotSymmetric {
                        from: VertexId(v),
                        to: VertexId(u),
                    });
                }
            }
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            if nbrs.len() < 3 {
                return Err(BuildError::DegreeTooLow {
                    vertex: VertexId(v),
                    degree: nbrs.len(),
                });
            }
        }
        let degree_sum: usize = rotation.iter().map(Vec::len).sum();
        let edges = degree_sum / 2;
        if edges != 3 * n - 6 {
            return Err(BuildError::EulerViolation {
                edges,
                expected: 3 * n - 6,
            });
        }

        let t = PlaneTriangulation {
            rotation: rotation
                .into_iter()
                .map(|nbrs| nbrs.into_iter().map(VertexId).collect())
                .collect(),
        };
        t.trace_all()?;
        Ok(t)
    }

    /// Face-traces the whole table, erroring on any non-triangle. Each of
    /// the 2E directed edges is consumed exactly once, so 2n - 4 triangles
    /// come out and the map is a sphere by Euler's formula.
    fn trace_all(&self) -> Result<Vec<Face>, BuildError> {
        let mut used: Vec<Vec<bool>> = self
            .rotation
            .iter()
            .map(|nbrs| vec![false; nbrs.len()])
            .collect();
        let mut faces = Vec::with_capacity(2 * self.n() - 4);
        for start in self.vertices() {
            for i in 0..self.rotation[start.0].len() {
                if used[start.0][i] {
                    continue;
                }
                let head = self.rotation[start.0][i];
                let mut walk = Vec::new();
                let (mut a, mut b) = (start, head);
                loop {
                    let j = self.rotation[a.0].iter().position(|&x| x == b).unwrap();
                    if used[a.0][j] {
                        break;
                    }
                    used[a.0][j] = true;
                    walk.push(a);
                    let next = self.successor(b, a);
                    a = b;
                    b = next;
                }
                if walk.len() != 3 {
                    return Err(BuildError::NotTriangular {
                        from: start,
                        to: head,
                        len: walk.len(),
                    });
                }
                faces.push(Face {
                    vertices: [walk[0], walk[1], walk[2]],
                });
            }
        }
        debug_assert_eq!(faces.len(), 2 * self.n() - 4);
        Ok(faces)
    }

    /// The canonical smallest triangulation (n = 4); the enumeration seed.
    pub fn tetrahedron() -> PlaneTriangulation {
        PlaneTriangulation::build(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .expect("tetrahedron table is valid")
    }

    /// The 6-vertex triangulation with all degrees 4.
    pub fn octahedron() -> PlaneTriangulation {
        PlaneTriangulation::build(vec![
            vec![1, 2, 3, 4],
            vec![0, 4, 5, 2],
            vec![0, 1, 5, 3],
            vec![0, 2, 5, 4],
            vec![0, 3, 5, 1],
            vec![1, 4, 3, 2],
        ])
        .expect("octahedron table is valid")
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n()).map(VertexId)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v.0].len()
    }

    /// Clockwise neighbor cycle of `v`.
    pub fn rotation_of(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v.0]
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        let (u, v) = e.endpoints();
        u.0 < self.n() && v.0 < self.n() && self.rotation[u.0].contains(&v)
    }

    /// Successor of `u` in the rotation of `v`. Panics if `u` is not a
    /// neighbor of `v`.
    pub(crate) fn successor(&self, v: VertexId, u: VertexId) -> VertexId {
        let nbrs = &self.rotation[v.0];
        let i = nbrs
            .iter()
            .position(|&x| x == u)
            .unwrap_or_else(|| panic!("{u} is not a neighbor of {v}"));
        nbrs[(i + 1) % nbrs.len()]
    }

    /// All 2n - 4 faces, in deterministic trace order.
    pub fn faces(&self) -> Vec<Face> {
        self.trace_all().expect("validated at build time")
    }

    /// All 3n - 6 edges, sorted by endpoint indices.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(3 * self.n() - 6);
        for v in self.vertices() {
            for &u in self.rotation_of(v) {
                if v < u {
                    out.push(Edge::new(v, u));
                }
            }
        }
        out.sort();
        out
    }

    /// Vertex degrees in ascending order; sums to 6(n - 2).
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.rotation.iter().map(Vec::len).collect();
        degs.sort_unstable();
        degs
    }

    /// The reflected embedding: every rotation reversed. An involution.
    pub fn mirror(&self) -> PlaneTriangulation {
        PlaneTriangulation {
            rotation: self
                .rotation
                .iter()
                .map(|nbrs| nbrs.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Sorted degrees of the endpoints of `e`: the "3-4"/"4-4" edge
    /// classification used to pick expansion sites.
    pub fn edge_class(&self, e: Edge) -> Result<(usize, usize), EdgeAbsent> {
        if !self.contains_edge(e) {
            return Err(EdgeAbsent { edge: e });
        }
        let (u, v) = e.endpoints();
        let (du, dv) = (self.degree(u), self.degree(v));
        Ok(if du <= dv { (du, dv) } else { (dv, du) })
    }

    /// The two vertices opposite `e` across its two adjacent faces. In any
    /// valid triangulation (n >= 4) they are distinct; callers that rely on
    /// that still check.
    pub fn opposite_vertices(&self, e: Edge) -> Result<(VertexId, VertexId), EdgeAbsent> {
        if !self.contains_edge(e) {
            return Err(EdgeAbsent { edge: e });
        }
        let (u, v) = e.endpoints();
        Ok((self.successor(v, u), self.successor(u, v)))
    }

    /// Raw rotation table as index vectors (for serialization).
    pub fn rotation_table(&self) -> Vec<Vec<usize>> {
        self.rotation
            .iter()
            .map(|nbrs| nbrs.iter().map(|v| v.0).collect())
            .collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("edge {edge} is not present in the triangulation")]
pub struct EdgeAbsent {
    pub edge: Edge,
}
