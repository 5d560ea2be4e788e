//! Vertex-insertion procedures and the breadth-first enumeration of all
//! sphere triangulations up to a vertex bound, modulo isomorphism.
//!
//! Three expansions grow a triangulation by one vertex and three edges:
//!
//! 1. a new degree-3 vertex in the middle of a face;
//! 2. a new degree-4 vertex subdividing an edge, joined to the two
//!    opposite vertices of the adjacent triangles;
//! 3. a new degree-n' vertex inside an empty chordal n'-gon whose interior
//!    chords are deleted.
//!
//! Every face/edge/polygon site of every representative is expanded and the
//! children are deduplicated by canonical code; no symmetry arguments are
//! trusted. The method is sound for n < 12, hence the hard bound.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use thiserror::Error;

use crate::canonical::{canonical_code, CanonicalCode};
use crate::plane_map::{Edge, Face, PlaneTriangulation, VertexId};

/// Largest n the enumeration accepts; the insertion method is only
/// guaranteed complete below 12 vertices.
pub const MAX_N: usize = 11;

/// Default cap on polygon boundary length for procedure (3). Any
/// triangulation has a vertex of degree at most 5, so reinserting a removed
/// vertex never needs more than a 5-gon; 6 is a safety margin.
pub const DEFAULT_POLYGON_CAP: usize = 6;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Procedure {
    FaceInsertion,
    EdgeInsertion,
    PolygonInsertion,
}

impl Procedure {
    /// Conventional numeric id: 1, 2, 3.
    pub fn id(&self) -> u8 {
        match self {
            Procedure::FaceInsertion => 1,
            Procedure::EdgeInsertion => 2,
            Procedure::PolygonInsertion => 3,
        }
    }
}

impl fmt::Display for Procedure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.id())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InsertError {
    #[error("face {0} is not a face of the triangulation")]
    FaceAbsent(Face),
    #[error("edge {0} is not present in the triangulation")]
    EdgeAbsent(Edge),
    #[error("the faces adjacent to {0} share their opposite vertex; subdividing would create a multi-edge")]
    WouldCreateMultiEdge(Edge),
    #[error("invalid chordal polygon: {0}")]
    PolygonInvalid(PolygonDefect),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonDefect {
    #[error("boundary has {0} vertices, need at least 4")]
    BoundaryTooShort(usize),
    #[error("boundary repeats vertex {0}")]
    RepeatedVertex(VertexId),
    #[error("boundary pair {0} is not an edge")]
    MissingEdge(Edge),
    #[error("chosen disk contains vertex {0}")]
    DiskContainsVertex(VertexId),
    #[error("stored chord set does not match the disk interior")]
    ChordSetMismatch,
}

/// A simple cycle bounding a vertex-free disk, together with the chords
/// triangulating that disk. The disk meant is the one on the traced side of
/// the directed boundary (the face containing each directed boundary edge
/// lies inside), so the two sides of one cycle are two distinct polygons
/// with reversed boundaries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChordalPolygon {
    boundary: Vec<VertexId>,
    chords: Vec<Edge>,
}

impl ChordalPolygon {
    /// Validates the directed cycle `boundary` in `t` and computes the
    /// chord set of its traced-side disk. The boundary is normalized to
    /// start at its smallest vertex, orientation preserved.
    pub fn identify(
        t: &PlaneTriangulation,
        boundary: &[VertexId],
    ) -> Result<ChordalPolygon, PolygonDefect> {
        let k = boundary.len();
        if k < 4 {
            return Err(PolygonDefect::BoundaryTooShort(k));
        }
        let mut seen = HashSet::new();
        for &v in boundary {
            if !seen.insert(v) {
                return Err(PolygonDefect::RepeatedVertex(v));
            }
        }
        for i in 0..k {
            let (u, v) = (boundary[i], boundary[(i + 1) % k]);
            if v.0 >= t.n() || u.0 >= t.n() || !t.contains_edge(Edge::new(u, v)) {
                return Err(PolygonDefect::MissingEdge(Edge::new(u, v)));
            }
        }
        let (interior_vertices, chords) = disk_of(t, boundary);
        if let Some(&v) = interior_vertices.iter().min() {
            return Err(PolygonDefect::DiskContainsVertex(v));
        }
        // a vertex-free disk over a k-cycle is a triangulated polygon
        debug_assert_eq!(chords.len(), k - 3);
        let mut boundary = boundary.to_vec();
        let min_pos = (0..k).min_by_key(|&i| boundary[i]).unwrap();
        boundary.rotate_left(min_pos);
        Ok(ChordalPolygon { boundary, chords })
    }

    /// Unvalidated assembly for the brute-force scan; normalizes like
    /// `identify` so values from both paths compare equal.
    pub(crate) fn from_parts(mut boundary: Vec<VertexId>, mut chords: Vec<Edge>) -> ChordalPolygon {
        let min_pos = (0..boundary.len()).min_by_key(|&i| boundary[i]).unwrap();
        boundary.rotate_left(min_pos);
        chords.sort();
        ChordalPolygon { boundary, chords }
    }

    /// Boundary cycle, smallest vertex first, orientation selecting the disk.
    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    /// Interior chords of the disk, sorted.
    pub fn chords(&self) -> &[Edge] {
        &self.chords
    }

    pub fn boundary_len(&self) -> usize {
        self.boundary.len()
    }
}

impl fmt::Display for ChordalPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.boundary.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Flood-fills the faces on the traced side of the directed cycle and
/// returns (interior vertices, interior edges that are not boundary edges).
fn disk_of(t: &PlaneTriangulation, boundary: &[VertexId]) -> (Vec<VertexId>, Vec<Edge>) {
    let faces = t.faces();
    let mut face_of: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        let [a, b, c] = f.vertices();
        face_of.insert((a, b), i);
        face_of.insert((b, c), i);
        face_of.insert((c, a), i);
    }
    let k = boundary.len();
    let boundary_edges: HashSet<Edge> = (0..k)
        .map(|i| Edge::new(boundary[i], boundary[(i + 1) % k]))
        .collect();
    let mut inside = vec![false; faces.len()];
    let mut stack: Vec<usize> = (0..k)
        .map(|i| face_of[&(boundary[i], boundary[(i + 1) % k])])
        .collect();
    while let Some(fi) = stack.pop() {
        if inside[fi] {
            continue;
        }
        inside[fi] = true;
        let [a, b, c] = faces[fi].vertices();
        for (x, y) in [(a, b), (b, c), (c, a)] {
            if boundary_edges.contains(&Edge::new(x, y)) {
                continue;
            }
            let g = face_of[&(y, x)];
            if !inside[g] {
                stack.push(g);
            }
        }
    }
    let on_boundary: HashSet<VertexId> = boundary.iter().copied().collect();
    let mut interior_vertices = HashSet::new();
    let mut interior_edges = HashSet::new();
    for (fi, f) in faces.iter().enumerate() {
        if !inside[fi] {
            continue;
        }
        for v in f.vertices() {
            if !on_boundary.contains(&v) {
                interior_vertices.insert(v);
            }
        }
        for e in f.edges() {
            if !boundary_edges.contains(&e) {
                interior_edges.insert(e);
            }
        }
    }
    let mut vs: Vec<VertexId> = interior_vertices.into_iter().collect();
    vs.sort();
    let mut es: Vec<Edge> = interior_edges.into_iter().collect();
    es.sort();
    (vs, es)
}

fn is_traced_face(t: &PlaneTriangulation, f: &Face) -> bool {
    let [a, b, c] = f.vertices();
    if a.0 >= t.n() || b.0 >= t.n() || c.0 >= t.n() {
        return false;
    }
    for (x, y) in [(a, b), (b, c), (c, a)] {
        if !t.contains_edge(Edge::new(x, y)) {
            return false;
        }
    }
    // cyclic successor relations of the directed cycle a -> b -> c -> a
    t.successor(b, a) == c && t.successor(c, b) == a && t.successor(a, c) == b
}

fn insert_after(nbrs: &mut Vec<usize>, after: usize, new: usize) {
    let i = nbrs.iter().position(|&x| x == after).expect("neighbor present");
    nbrs.insert(i + 1, new);
}

/// Procedure (1): new vertex in the middle of face `f`, joined to its three
/// corners.
pub fn insert_in_face(t: &PlaneTriangulation, f: &Face) -> Result<PlaneTriangulation, InsertError> {
    if !is_traced_face(t, f) {
        return Err(InsertError::FaceAbsent(*f));
    }
    let [a, b, c] = f.vertices();
    let x = t.n();
    let mut table = t.rotation_table();
    insert_after(&mut table[b.0], a.0, x);
    insert_after(&mut table[c.0], b.0, x);
    insert_after(&mut table[a.0], c.0, x);
    table.push(vec![b.0, a.0, c.0]);
    Ok(PlaneTriangulation::build(table).expect("face insertion preserves validity"))
}

/// Procedure (2): new vertex subdividing `e`, joined to the two opposite
/// vertices of the adjacent triangles.
pub fn insert_on_edge(t: &PlaneTriangulation, e: Edge) -> Result<PlaneTriangulation, InsertError> {
    if !t.contains_edge(e) {
        return Err(InsertError::EdgeAbsent(e));
    }
    let (u, v) = e.endpoints();
    let (p, q) = t.opposite_vertices(e).expect("edge checked above");
    if p == q {
        return Err(InsertError::WouldCreateMultiEdge(e));
    }
    let x = t.n();
    let mut table = t.rotation_table();
    let iu = table[u.0].iter().position(|&w| w == v.0).unwrap();
    table[u.0][iu] = x;
    let iv = table[v.0].iter().position(|&w| w == u.0).unwrap();
    table[v.0][iv] = x;
    insert_after(&mut table[p.0], v.0, x);
    insert_after(&mut table[q.0], u.0, x);
    table.push(vec![u.0, p.0, v.0, q.0]);
    Ok(PlaneTriangulation::build(table).expect("edge insertion preserves validity"))
}

/// Procedure (3): delete the chords of an empty chordal polygon and join a
/// new vertex to all its boundary vertices.
pub fn insert_in_polygon(
    t: &PlaneTriangulation,
    p: &ChordalPolygon,
) -> Result<PlaneTriangulation, InsertError> {
    let checked =
        ChordalPolygon::identify(t, p.boundary()).map_err(InsertError::PolygonInvalid)?;
    if checked.chords() != p.chords() {
        return Err(InsertError::PolygonInvalid(PolygonDefect::ChordSetMismatch));
    }
    let boundary = checked.boundary();
    let k = boundary.len();
    let x = t.n();
    let mut table = t.rotation_table();
    for chord in checked.chords() {
        let (a, b) = chord.endpoints();
        table[a.0].retain(|&w| w != b.0);
        table[b.0].retain(|&w| w != a.0);
    }
    for i in 0..k {
        let prev = boundary[(i + k - 1) % k];
        insert_after(&mut table[boundary[i].0], prev.0, x);
    }
    table.push(boundary.iter().rev().map(|v| v.0).collect());
    Ok(PlaneTriangulation::build(table).expect("polygon insertion preserves validity"))
}

/// All chordal polygons of boundary length 4..=`max_len`, each disk side
/// listed separately, in deterministic order.
pub fn enumerate_polygons(t: &PlaneTriangulation, max_len: usize) -> Vec<ChordalPolygon> {
    assert!(
        (4..=t.n()).contains(&max_len),
        "polygon length bound must be in 4..=n, got {max_len}"
    );
    let mut out = Vec::new();
    let mut path: Vec<VertexId> = Vec::with_capacity(max_len);
    for s in t.vertices() {
        path.push(s);
        extend_cycles(t, max_len, &mut path, &mut out);
        path.pop();
    }
    out.sort_by(|a, b| {
        (a.boundary_len(), a.boundary()).cmp(&(b.boundary_len(), b.boundary()))
    });
    out
}

/// Grows simple paths whose first vertex is the minimum; every closing edge
/// met at length >= 4 yields a directed cycle, examined on its traced side.
fn extend_cycles(
    t: &PlaneTriangulation,
    max_len: usize,
    path: &mut Vec<VertexId>,
    out: &mut Vec<ChordalPolygon>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    let mut nbrs: Vec<VertexId> = t.rotation_of(last).to_vec();
    nbrs.sort();
    for w in nbrs {
        if w == s && path.len() >= 4 {
            if let Ok(p) = ChordalPolygon::identify(t, path) {
                out.push(p);
            }
        }
        if w > s && !path.contains(&w) && path.len() < max_len {
            path.push(w);
            extend_cycles(t, max_len, path, out);
            path.pop();
        }
    }
}

/// Where a representative came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Origin {
    Seed,
    Expanded {
        parent: CanonicalCode,
        procedure: Procedure,
        site: Site,
    },
}

/// The expansion site, in the parent's vertex labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Site {
    Face([VertexId; 3]),
    Edge(Edge),
    Polygon(Vec<VertexId>),
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Face([a, b, c]) => write!(f, "face ({a} {b} {c})"),
            Site::Edge(e) => write!(f, "edge {e}"),
            Site::Polygon(b) => {
                write!(f, "polygon [")?;
                for (i, v) in b.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Representative {
    pub triangulation: PlaneTriangulation,
    pub code: CanonicalCode,
    pub origin: Origin,
}

/// Canonical representatives per vertex count, sorted by code within each n.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    by_n: BTreeMap<usize, Vec<Representative>>,
    polygon_cap: usize,
}

impl EnumerationResult {
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        self.by_n.iter().map(|(&n, v)| (n, v.len())).collect()
    }

    pub fn representatives(&self, n: usize) -> &[Representative] {
        self.by_n.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn levels(&self) -> impl Iterator<Item = (usize, &[Representative])> {
        self.by_n.iter().map(|(&n, v)| (n, v.as_slice()))
    }

    pub fn max_n(&self) -> usize {
        *self.by_n.keys().last().expect("seed level always present")
    }

    /// The polygon size cap procedure (3) ran with.
    pub fn polygon_cap(&self) -> usize {
        self.polygon_cap
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error(
        "n_max must be between 4 and {MAX_N}: the insertion method is only \
         guaranteed complete for n < 12 (requested {requested})"
    )]
    NMaxOutOfRange { requested: usize },
}

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub n_max: usize,
    /// Cap on procedure (3) polygon size; clamped to n per level.
    pub polygon_cap: usize,
    pub use_face_insertion: bool,
    pub use_edge_insertion: bool,
    pub use_polygon_insertion: bool,
    /// When set, parents and sites are expanded in a seeded shuffled order;
    /// the resulting code sets must not change.
    pub shuffle_seed: Option<u64>,
}

impl EnumerationConfig {
    pub fn new(n_max: usize) -> EnumerationConfig {
        EnumerationConfig {
            n_max,
            polygon_cap: DEFAULT_POLYGON_CAP,
            use_face_insertion: true,
            use_edge_insertion: true,
            use_polygon_insertion: true,
            shuffle_seed: None,
        }
    }
}

/// Enumerates all triangulations with 4..=n_max vertices up to isomorphism
/// (mirror images identified), starting from the tetrahedron.
pub fn enumerate(n_max: usize) -> Result<EnumerationResult, EnumerateError> {
    enumerate_with(&EnumerationConfig::new(n_max))
}

pub fn enumerate_with(config: &EnumerationConfig) -> Result<EnumerationResult, EnumerateError> {
    if !(4..=MAX_N).contains(&config.n_max) {
        return Err(EnumerateError::NMaxOutOfRange {
            requested: config.n_max,
        });
    }
    let mut rng = config
        .shuffle_seed
        .map(rand::rngs::StdRng::seed_from_u64);

    let seed = PlaneTriangulation::tetrahedron();
    let mut by_n = BTreeMap::new();
    by_n.insert(
        4,
        vec![Representative {
            code: canonical_code(&seed),
            triangulation: seed,
            origin: Origin::Seed,
        }],
    );

    for n in 4..config.n_max {
        let mut parent_order: Vec<usize> = (0..by_n[&n].len()).collect();
        if let Some(rng) = rng.as_mut() {
            parent_order.shuffle(rng);
        }
        let mut children: BTreeMap<CanonicalCode, Representative> = BTreeMap::new();
        for pi in parent_order {
            let parent = &by_n[&n][pi];
            let t = &parent.triangulation;
            enum Application {
                Face(Face),
                Edge(Edge),
                Polygon(ChordalPolygon),
            }
            let mut sites: Vec<Application> = Vec::new();
            if config.use_face_insertion {
                sites.extend(t.faces().into_iter().map(Application::Face));
            }
            if config.use_edge_insertion {
                sites.extend(t.edges().into_iter().map(Application::Edge));
            }
            if config.use_polygon_insertion {
                let cap = config.polygon_cap.clamp(4, t.n());
                sites.extend(enumerate_polygons(t, cap).into_iter().map(Application::Polygon));
            }
            if let Some(rng) = rng.as_mut() {
                sites.shuffle(rng);
            }
            for app in sites {
                let (child, procedure, site) = match app {
                    Application::Face(f) => (
                        insert_in_face(t, &f).expect("face site is valid"),
                        Procedure::FaceInsertion,
                        Site::Face(f.vertices()),
                    ),
                    Application::Edge(e) => match insert_on_edge(t, e) {
                        Ok(child) => (child, Procedure::EdgeInsertion, Site::Edge(e)),
                        // coincident opposite vertices: skip the site
                        Err(InsertError::WouldCreateMultiEdge(_)) => continue,
                        Err(other) => panic!("edge site failed: {other}"),
                    },
                    Application::Polygon(p) => {
                        let site = Site::Polygon(p.boundary().to_vec());
                        (
                            insert_in_polygon(t, &p).expect("polygon site is valid"),
                            Procedure::PolygonInsertion,
                            site,
                        )
                    }
                };
                let code = canonical_code(&child);
                children.entry(code.clone()).or_insert_with(|| Representative {
                    triangulation: child,
                    code,
                    origin: Origin::Expanded {
                        parent: parent.code.clone(),
                        procedure,
                        site,
                    },
                });
            }
        }
        by_n.insert(n + 1, children.into_values().collect());
    }
    Ok(EnumerationResult {
        by_n,
        polygon_cap: config.polygon_cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_insertion_on_tetrahedron() {
        let t = PlaneTriangulation::tetrahedron();
        for f in t.faces() {
            let child = insert_in_face(&t, &f).unwrap();
            assert_eq!(child.n(), 5);
            assert_eq!(child.degree_multiset(), vec![3, 3, 4, 4, 4]);
            assert_eq!(child.degree(VertexId(4)), 3);
        }
    }

    #[test]
    fn face_insertion_rejects_foreign_faces() {
        let oct = PlaneTriangulation::octahedron();
        let tetra = PlaneTriangulation::tetrahedron();
        // a tetrahedron face is not a face of the octahedron
        let foreign = tetra.faces()[0];
        assert_eq!(
            insert_in_face(&oct, &foreign),
            Err(InsertError::FaceAbsent(foreign))
        );
        // mirrored faces are the reversed cycles, never traced faces here
        for f in oct.mirror().faces() {
            assert_eq!(insert_in_face(&oct, &f), Err(InsertError::FaceAbsent(f)));
        }
    }

    #[test]
    fn edge_insertion_examples() {
        let t = PlaneTriangulation::tetrahedron();
        for e in t.edges() {
            let child = insert_on_edge(&t, e).unwrap();
            assert_eq!(child.n(), 5);
            assert_eq!(child.degree_multiset(), vec![3, 3, 4, 4, 4]);
            assert_eq!(child.degree(VertexId(4)), 4);
        }
        let absent = Edge::new(VertexId(0), VertexId(5));
        let oct = PlaneTriangulation::octahedron();
        assert_eq!(
            insert_on_edge(&oct, absent),
            Err(InsertError::EdgeAbsent(absent))
        );
    }

    #[test]
    fn five_vertex_constructions_are_isomorphic() {
        let t = PlaneTriangulation::tetrahedron();
        let by_face = insert_in_face(&t, &t.faces()[0]).unwrap();
        let by_edge = insert_on_edge(&t, t.edges()[0]).unwrap();
        assert!(crate::canonical::is_isomorphic(&by_face, &by_edge));
    }

    #[test]
    fn edge_classes_of_the_five_vertex_triangulation() {
        let t = PlaneTriangulation::tetrahedron();
        let g5 = insert_on_edge(&t, t.edges()[0]).unwrap();
        let classes: Vec<(usize, usize)> =
            g5.edges().iter().map(|&e| g5.edge_class(e).unwrap()).collect();
        assert_eq!(classes.iter().filter(|&&c| c == (4, 4)).count(), 3);
        assert_eq!(classes.iter().filter(|&&c| c == (3, 4)).count(), 6);
        // splitting a "4-4" edge gives the octahedron, a "3-4" edge the
        // other 6-vertex triangulation
        let oct = PlaneTriangulation::octahedron();
        for &e in &g5.edges() {
            let child = insert_on_edge(&g5, e).unwrap();
            match g5.edge_class(e).unwrap() {
                (4, 4) => {
                    assert!(crate::canonical::is_isomorphic(&child, &oct));
                }
                (3, 4) => {
                    assert_eq!(child.degree_multiset(), vec![3, 3, 4, 4, 5, 5]);
                }
                other => panic!("unexpected edge class {other:?}"),
            }
        }
    }

    #[test]
    fn polygon_insertion_on_tetrahedron_quad() {
        let t = PlaneTriangulation::tetrahedron();
        let polys = enumerate_polygons(&t, 4);
        assert_eq!(polys.len(), 6); // each edge's two adjacent faces, per side
        for p in &polys {
            assert_eq!(p.chords().len(), 1);
            let child = insert_in_polygon(&t, p).unwrap();
            assert_eq!(child.degree_multiset(), vec![3, 3, 4, 4, 4]);
        }
    }

    #[test]
    fn polygon_counts_match_independent_values() {
        // frozen from a brute-force cycle scan
        let oct = PlaneTriangulation::octahedron();
        assert_eq!(enumerate_polygons(&oct, 4).len(), 12);
        assert_eq!(enumerate_polygons(&oct, 5).len(), 36);
        assert_eq!(enumerate_polygons(&oct, 6).len(), 68);
        let t = PlaneTriangulation::tetrahedron();
        let g5 = insert_on_edge(&t, t.edges()[0]).unwrap();
        assert_eq!(enumerate_polygons(&g5, 4).len(), 9);
        assert_eq!(enumerate_polygons(&g5, 5).len(), 21);
    }

    #[test]
    #[should_panic(expected = "polygon length bound")]
    fn polygon_bound_below_four_is_rejected() {
        enumerate_polygons(&PlaneTriangulation::tetrahedron(), 3);
    }

    #[test]
    fn polygon_insertion_rejects_nonempty_disk() {
        // an octahedron equator: both sides contain a pole
        let oct = PlaneTriangulation::octahedron();
        let equator = [VertexId(1), VertexId(2), VertexId(3), VertexId(4)];
        match ChordalPolygon::identify(&oct, &equator) {
            Err(PolygonDefect::DiskContainsVertex(_)) => {}
            other => panic!("expected DiskContainsVertex, got {other:?}"),
        }
    }

    #[test]
    fn every_procedure_adds_one_vertex_and_three_edges() {
        let t = PlaneTriangulation::octahedron();
        let e0 = t.edges().len();
        for f in t.faces() {
            let c = insert_in_face(&t, &f).unwrap();
            assert_eq!((c.n(), c.edges().len()), (7, e0 + 3));
            assert_eq!(c.degree(VertexId(6)), 3);
        }
        for e in t.edges() {
            let c = insert_on_edge(&t, e).unwrap();
            assert_eq!((c.n(), c.edges().len()), (7, e0 + 3));
        }
        for p in enumerate_polygons(&t, 4) {
            let c = insert_in_polygon(&t, &p).unwrap();
            assert_eq!((c.n(), c.edges().len()), (7, e0 + 3));
        }
    }

    #[test]
    fn pentagon_insertion_on_the_three_apex_seven_vertex_graph() {
        // the 7-vertex triangulation with degrees [3,3,3,5,5,5,6] admits
        // empty pentagons; inserting in one yields a degree-5 vertex at n=8
        let result = enumerate(7).unwrap();
        let t = result
            .representatives(7)
            .iter()
            .map(|r| &r.triangulation)
            .find(|t| t.degree_multiset() == vec![3, 3, 3, 5, 5, 5, 6])
            .unwrap();
        let pentagons: Vec<ChordalPolygon> = enumerate_polygons(t, 5)
            .into_iter()
            .filter(|p| p.boundary_len() == 5)
            .collect();
        assert!(!pentagons.is_empty());
        for p in &pentagons {
            assert_eq!(p.chords().len(), 2);
            let child = insert_in_polygon(t, p).unwrap();
            assert_eq!(child.n(), 8);
            assert_eq!(child.degree(VertexId(7)), 5);
        }
    }

    #[test]
    fn counts_up_to_seven() {
        let result = enumerate(7).unwrap();
        let counts = result.counts();
        assert_eq!(counts[&4], 1);
        assert_eq!(counts[&5], 1);
        assert_eq!(counts[&6], 2);
        assert_eq!(counts[&7], 5);
    }

    #[test]
    fn rejects_out_of_range_n_max() {
        assert_eq!(
            enumerate(12).unwrap_err(),
            EnumerateError::NMaxOutOfRange { requested: 12 }
        );
        assert_eq!(
            enumerate(3).unwrap_err(),
            EnumerateError::NMaxOutOfRange { requested: 3 }
        );
    }

    #[test]
    fn provenance_records_parent_and_site() {
        let result = enumerate(5).unwrap();
        let five = result.representatives(5);
        assert_eq!(five.len(), 1);
        match &five[0].origin {
            Origin::Expanded { parent, .. } => {
                assert_eq!(parent, &result.representatives(4)[0].code);
            }
            Origin::Seed => panic!("5-vertex representative cannot be the seed"),
        }
        assert_eq!(result.polygon_cap(), DEFAULT_POLYGON_CAP);
    }
}
