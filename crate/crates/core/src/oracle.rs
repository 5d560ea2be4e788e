//! Independent brute-force verifiers. These deliberately use different
//! representations and algorithms from the main modules (adjacency
//! matrices and permutation loops for isomorphism, flat ternary counters
//! for colorings, a global face partition for polygon scans) so that a bug
//! in the fast path and a bug here are unlikely to agree. They are slow by
//! design and hard-capped in size.

use std::fmt;
use std::time::Duration;

use itertools::Itertools;
use thiserror::Error;

use crate::generator::ChordalPolygon;
use crate::plane_map::{Edge, PlaneTriangulation, VertexId};
use crate::tricolor::base_face;

/// Brute-force isomorphism is capped at 9 vertices (9! permutations); the
/// coloring scan at 18 edges (3^18 assignments).
#[derive(Debug, Error, PartialEq, Eq)]
#[error("{what} is capped at {max}, instance has {actual}")]
pub struct TooLarge {
    pub what: &'static str,
    pub actual: usize,
    pub max: usize,
}

/// One oracle-vs-method comparison, for reporting.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub instance: String,
    pub method_result: String,
    pub oracle_result: String,
    pub agree: bool,
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn new(
        instance: impl Into<String>,
        method_result: impl Into<String>,
        oracle_result: impl Into<String>,
        elapsed: Duration,
    ) -> OracleReport {
        let method_result = method_result.into();
        let oracle_result = oracle_result.into();
        OracleReport {
            agree: method_result == oracle_result,
            instance: instance.into(),
            method_result,
            oracle_result,
            elapsed,
        }
    }
}

impl fmt::Display for OracleReport {
    // elapsed is deliberately not printed: reports must be byte-identical
    // across runs
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: method={} oracle={} {}",
            self.instance,
            self.method_result,
            self.oracle_result,
            if self.agree { "agree" } else { "DISAGREE" }
        )
    }
}

fn adjacency_matrix(t: &PlaneTriangulation) -> Vec<Vec<bool>> {
    let n = t.n();
    let mut adj = vec![vec![false; n]; n];
    for e in t.edges() {
        let (u, v) = e.endpoints();
        adj[u.0][v.0] = true;
        adj[v.0][u.0] = true;
    }
    adj
}

/// Abstract-graph isomorphism by trying every vertex bijection. For simple
/// planar triangulations this coincides with embedded isomorphism up to
/// reflection (3-connected planar graphs embed uniquely), which is exactly
/// the equivalence the canonical code implements.
pub fn brute_force_isomorphic(
    t1: &PlaneTriangulation,
    t2: &PlaneTriangulation,
) -> Result<bool, TooLarge> {
    for t in [t1, t2] {
        if t.n() > 9 {
            return Err(TooLarge {
                what: "brute-force isomorphism",
                actual: t.n(),
                max: 9,
            });
        }
    }
    if t1.n() != t2.n() {
        return Ok(false);
    }
    let n = t1.n();
    let a = adjacency_matrix(t1);
    let b = adjacency_matrix(t2);
    'perm: for p in (0..n).permutations(n) {
        for u in 0..n {
            for v in (u + 1)..n {
                if a[u][v] != b[p[u]][p[v]] {
                    continue 'perm;
                }
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// Face list as triples of indices into the sorted edge list.
fn face_edge_indices(t: &PlaneTriangulation) -> Vec<[usize; 3]> {
    let edges = t.edges();
    t.faces()
        .into_iter()
        .map(|f| f.edges().map(|e| edges.binary_search(&e).unwrap()))
        .collect()
}

fn all_faces_rainbow(colors: &[u8], faces: &[[usize; 3]]) -> bool {
    faces.iter().all(|&[a, b, c]| {
        colors[a] != colors[b] && colors[b] != colors[c] && colors[a] != colors[c]
    })
}

/// Counts every rainbow coloring, with no quotient: a flat ternary counter
/// over all 3^E assignments. E = 18 means ~3.9e8 assignments, a few
/// seconds; the cap rejects anything larger.
pub fn brute_force_coloring_count(t: &PlaneTriangulation) -> Result<u64, TooLarge> {
    scan_colorings(t, false)
}

/// The fixed-base variant: the base face's three edges (ascending) are
/// pinned to colors 0, 1, 2 — the same normalization the class enumeration
/// uses — so the 3^(E-3) scan counts classes directly.
pub fn brute_force_coloring_count_fixed_base(t: &PlaneTriangulation) -> Result<u64, TooLarge> {
    scan_colorings(t, true)
}

fn scan_colorings(t: &PlaneTriangulation, fix_base: bool) -> Result<u64, TooLarge> {
    let edges = t.edges();
    if edges.len() > 18 {
        return Err(TooLarge {
            what: "brute-force coloring scan",
            actual: edges.len(),
            max: 18,
        });
    }
    let faces = face_edge_indices(t);
    let mut colors = vec![0u8; edges.len()];
    let free: Vec<usize> = if fix_base {
        let mut base_edges = base_face(t).edges();
        base_edges.sort();
        let pinned: Vec<usize> = base_edges
            .iter()
            .map(|e| edges.binary_search(e).unwrap())
            .collect();
        for (value, &i) in pinned.iter().enumerate() {
            colors[i] = value as u8;
        }
        (0..edges.len()).filter(|i| !pinned.contains(i)).collect()
    } else {
        (0..edges.len()).collect()
    };

    let mut count = 0u64;
    loop {
        if all_faces_rainbow(&colors, &faces) {
            count += 1;
        }
        // odometer increment over the free digits
        let mut i = 0;
        loop {
            if i == free.len() {
                return Ok(count);
            }
            colors[free[i]] += 1;
            if colors[free[i]] < 3 {
                break;
            }
            colors[free[i]] = 0;
            i += 1;
        }
    }
}

/// Re-derives all chordal polygons by exhaustive cycle enumeration over the
/// abstract adjacency structure plus a global two-sided face partition, to
/// cross-check the generator's site search.
pub fn brute_force_polygon_scan(
    t: &PlaneTriangulation,
    max_len: usize,
) -> Result<Vec<ChordalPolygon>, TooLarge> {
    if t.n() > 9 {
        return Err(TooLarge {
            what: "brute-force polygon scan",
            actual: t.n(),
            max: 9,
        });
    }
    assert!(
        (4..=t.n()).contains(&max_len),
        "polygon length bound must be in 4..=n, got {max_len}"
    );
    let adj = adjacency_matrix(t);
    let n = t.n();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for s in 0..n {
        path.push(s);
        scan_cycles(t, &adj, max_len, &mut path, &mut out);
        path.pop();
    }
    out.sort_by(|a, b| {
        (a.boundary_len(), a.boundary()).cmp(&(b.boundary_len(), b.boundary()))
    });
    out.dedup();
    Ok(out)
}

fn scan_cycles(
    t: &PlaneTriangulation,
    adj: &[Vec<bool>],
    max_len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<ChordalPolygon>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    for w in 0..adj.len() {
        if !adj[last][w] {
            continue;
        }
        if w == s && path.len() >= 4 {
            if let Some(p) = side_polygon(t, path) {
                out.push(p);
            }
        }
        if w > s && !path.contains(&w) && path.len() < max_len {
            path.push(w);
            scan_cycles(t, adj, max_len, path, out);
            path.pop();
        }
    }
}

/// Splits the faces along the cycle with a union-find over face adjacency,
/// takes the side containing the first directed boundary edge, and accepts
/// it when it holds no vertex off the boundary.
fn side_polygon(t: &PlaneTriangulation, cycle: &[usize]) -> Option<ChordalPolygon> {
    let faces = t.faces();
    let k = cycle.len();
    let boundary_edges: Vec<Edge> = (0..k)
        .map(|i| Edge::new(VertexId(cycle[i]), VertexId(cycle[(i + 1) % k])))
        .collect();

    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // faces sharing an off-boundary edge end up on the same side
    let mut owner: std::collections::HashMap<Edge, usize> = std::collections::HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for e in f.edges() {
            if boundary_edges.contains(&e) {
                continue;
            }
            if let Some(&other) = owner.get(&e) {
                let (a, b) = (find(&mut parent, fi), find(&mut parent, other));
                if a != b {
                    parent[a] = b;
                }
            } else {
                owner.insert(e, fi);
            }
        }
    }
    let first = faces
        .iter()
        .position(|f| {
            let [a, b, c] = f.vertices();
            [(a, b), (b, c), (c, a)]
                .contains(&(VertexId(cycle[0]), VertexId(cycle[1])))
        })
        .expect("every directed edge lies in a face");
    let side = find(&mut parent, first);

    let mut chords = Vec::new();
    for (fi, f) in faces.iter().enumerate() {
        if find(&mut parent, fi) != side {
            continue;
        }
        for v in f.vertices() {
            if !cycle.contains(&v.0) {
                return None; // a vertex inside the disk
            }
        }
        for e in f.edges() {
            if !boundary_edges.contains(&e) && !chords.contains(&e) {
                chords.push(e);
            }
        }
    }
    Some(ChordalPolygon::from_parts(
        cycle.iter().map(|&v| VertexId(v)).collect(),
        chords,
    ))
}
