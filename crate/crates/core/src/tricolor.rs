//! Rainbow three-edge-colorings: assignments of one of three colors to
//! every edge such that each face's three sides receive three distinct
//! colors. Two colorings are equivalent iff they differ by a renaming of
//! the colors; one representative per class is produced by pinning the
//! colors of a fixed base face.
//!
//! Since every face is rainbow, no nontrivial color permutation fixes a
//! coloring, so the number of unrestricted rainbow colorings is always
//! exactly six times the class count (asserted against the brute-force
//! oracle).

use std::fmt;

use thiserror::Error;

use crate::plane_map::{Edge, Face, PlaneTriangulation, VertexId};

/// One of the three edge colors, conventionally red, green, and blue;
/// serialized as 0, 1, 2.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    pub fn value(self) -> u8 {
        match self {
            Color::Red => 0,
            Color::Green => 1,
            Color::Blue => 2,
        }
    }

    pub fn from_value(v: u8) -> Option<Color> {
        Color::ALL.get(v as usize).copied()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TricolorError {
    #[error("edge {edge} has no color assigned")]
    PartialColoring { edge: Edge },
    #[error("edge {edge} is not an edge of this triangulation")]
    UnknownEdge { edge: Edge },
    #[error("coloring belongs to a different triangulation")]
    ForeignColoring,
    #[error("face {face} does not carry three distinct colors")]
    InvalidColoring { face: Face },
}

/// A (possibly partial) assignment of colors to the edges of one fixed
/// triangulation, indexed by its sorted edge order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColoring {
    edges: Vec<Edge>,
    slots: Vec<Option<Color>>,
}

impl EdgeColoring {
    /// All edges unassigned.
    pub fn empty(t: &PlaneTriangulation) -> EdgeColoring {
        let edges = t.edges();
        let slots = vec![None; edges.len()];
        EdgeColoring { edges, slots }
    }

    /// The triangulation's edges, sorted; slot i colors edge i.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    fn index_of(&self, e: Edge) -> Result<usize, TricolorError> {
        self.edges
            .binary_search(&e)
            .map_err(|_| TricolorError::UnknownEdge { edge: e })
    }

    pub fn get(&self, e: Edge) -> Result<Option<Color>, TricolorError> {
        Ok(self.slots[self.index_of(e)?])
    }

    pub fn set(&mut self, e: Edge, c: Color) -> Result<(), TricolorError> {
        let i = self.index_of(e)?;
        self.slots[i] = Some(c);
        Ok(())
    }

    pub fn unset(&mut self, e: Edge) -> Result<(), TricolorError> {
        let i = self.index_of(e)?;
        self.slots[i] = None;
        Ok(())
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    /// First unassigned edge, if any.
    pub fn first_unassigned(&self) -> Option<Edge> {
        self.slots
            .iter()
            .position(Option::is_none)
            .map(|i| self.edges[i])
    }

    /// (edge, color) pairs in edge order; None entries are skipped.
    pub fn assignments(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.edges
            .iter()
            .zip(&self.slots)
            .filter_map(|(&e, &c)| c.map(|c| (e, c)))
    }

    /// Raw slot values in edge order.
    pub fn slots(&self) -> &[Option<Color>] {
        &self.slots
    }

    /// Applies a permutation of the three colors to every assigned edge.
    pub fn renamed(&self, perm: [Color; 3]) -> EdgeColoring {
        EdgeColoring {
            edges: self.edges.clone(),
            slots: self
                .slots
                .iter()
                .map(|s| s.map(|c| perm[c.value() as usize]))
                .collect(),
        }
    }
}

fn check_same_edges(t: &PlaneTriangulation, c: &EdgeColoring) -> Result<(), TricolorError> {
    if c.edges == t.edges() {
        Ok(())
    } else {
        Err(TricolorError::ForeignColoring)
    }
}

/// True iff every face of `t` carries three distinct colors under the total
/// coloring `c`.
pub fn validate(t: &PlaneTriangulation, c: &EdgeColoring) -> Result<bool, TricolorError> {
    check_same_edges(t, c)?;
    if let Some(edge) = c.first_unassigned() {
        return Err(TricolorError::PartialColoring { edge });
    }
    for face in t.faces() {
        let [a, b, d] = face.edges().map(|e| c.get(e).unwrap().unwrap());
        if a == b || b == d || a == d {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The base face used to pin class representatives: the face with the
/// lexicographically smallest vertex triple.
pub fn base_face(t: &PlaneTriangulation) -> Face {
    t.faces()
        .into_iter()
        .min_by_key(|f| f.sorted_vertices())
        .expect("triangulations have faces")
}

/// Enumerates one representative per renaming class of rainbow colorings:
/// the three edges of `base` (ascending) are pinned to red, green, blue and
/// the search backtracks over the rest. Results are sorted by their color
/// sequence over the edge order.
pub fn enumerate_colorings_from(t: &PlaneTriangulation, base: Face) -> Vec<EdgeColoring> {
    let edges = t.edges();
    let index_of = |e: Edge| edges.binary_search(&e).expect("face edge exists");

    // conflict lists: edges sharing a face must differ
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for face in t.faces() {
        let idx = face.edges().map(index_of);
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !conflicts[idx[i]].contains(&idx[j]) {
                    conflicts[idx[i]].push(idx[j]);
                }
            }
        }
    }

    let mut slots: Vec<Option<Color>> = vec![None; edges.len()];
    let mut base_edges = base.edges();
    base_edges.sort();
    for (e, c) in base_edges.into_iter().zip(Color::ALL) {
        slots[index_of(e)] = Some(c);
    }

    let mut found: Vec<Vec<Option<Color>>> = Vec::new();
    search(&mut slots, &conflicts, &mut found);
    found.sort_by_key(|slots| {
        slots
            .iter()
            .map(|c| c.unwrap().value())
            .collect::<Vec<u8>>()
    });
    found
        .into_iter()
        .map(|slots| EdgeColoring {
            edges: edges.clone(),
            slots,
        })
        .collect()
}

/// Backtracking over uncolored edges, most constrained first. Picking an
/// edge with a single feasible color first makes this unit propagation; in
/// particular the degree-3 forcing rule is applied automatically.
fn search(
    slots: &mut Vec<Option<Color>>,
    conflicts: &[Vec<usize>],
    found: &mut Vec<Vec<Option<Color>>>,
) {
    let mut best: Option<(usize, Vec<Color>)> = None;
    for i in 0..slots.len() {
        if slots[i].is_some() {
            continue;
        }
        let feasible: Vec<Color> = Color::ALL
            .into_iter()
            .filter(|c| conflicts[i].iter().all(|&j| slots[j] != Some(*c)))
            .collect();
        let better = match &best {
            None => true,
            Some((_, b)) => feasible.len() < b.len(),
        };
        if better {
            let dead_end = feasible.is_empty();
            best = Some((i, feasible));
            if dead_end {
                return;
            }
        }
    }
    match best {
        None => found.push(slots.clone()),
        Some((i, feasible)) => {
            for c in feasible {
                slots[i] = Some(c);
                search(slots, conflicts, found);
                slots[i] = None;
            }
        }
    }
}

/// Representatives with the default base face.
pub fn enumerate_colorings(t: &PlaneTriangulation) -> Vec<EdgeColoring> {
    enumerate_colorings_from(t, base_face(t))
}

/// Number of rainbow colorings up to renaming of the colors.
pub fn count_colorings(t: &PlaneTriangulation) -> usize {
    enumerate_colorings(t).len()
}

/// One connected component of a single color's subgraph.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ComponentInfo {
    pub edge_count: usize,
    pub is_cycle: bool,
}

/// Per color, the multiset of component edge counts with cycle flags; the
/// renaming-invariant certificate used to tell colorings apart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoringClassSummary {
    per_color: [Vec<ComponentInfo>; 3],
}

impl ColoringClassSummary {
    pub fn for_color(&self, c: Color) -> &[ComponentInfo] {
        &self.per_color[c.value() as usize]
    }

    /// The three per-color multisets as an unordered (sorted) triple;
    /// invariant under renaming.
    pub fn unordered(&self) -> [Vec<ComponentInfo>; 3] {
        let mut triple = self.per_color.clone();
        triple.sort();
        triple
    }

    /// Total edges across all components of all colors.
    pub fn total_edges(&self) -> usize {
        self.per_color
            .iter()
            .flatten()
            .map(|c| c.edge_count)
            .sum()
    }
}

impl fmt::Display for ColoringClassSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comps) in self.per_color.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}:", i)?;
            for (j, c) in comps.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}{}", c.edge_count, if c.is_cycle { "c" } else { "" })?;
            }
        }
        Ok(())
    }
}

/// Component structure of each color class of a valid coloring.
pub fn class_summary(
    t: &PlaneTriangulation,
    c: &EdgeColoring,
) -> Result<ColoringClassSummary, TricolorError> {
    if !validate(t, c)? {
        let face = t
            .faces()
            .into_iter()
            .find(|f| {
                let [a, b, d] = f.edges().map(|e| c.get(e).unwrap().unwrap());
                a == b || b == d || a == d
            })
            .expect("validate returned false");
        return Err(TricolorError::InvalidColoring { face });
    }
    let per_color = Color::ALL.map(|color| {
        let class_edges: Vec<Edge> = c
            .assignments()
            .filter(|&(_, col)| col == color)
            .map(|(e, _)| e)
            .collect();
        components(t.n(), &class_edges)
    });
    let summary = ColoringClassSummary { per_color };
    debug_assert_eq!(summary.total_edges(), t.edges().len());
    Ok(summary)
}

fn components(n: usize, class_edges: &[Edge]) -> Vec<ComponentInfo> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in class_edges {
        let (u, v) = e.endpoints();
        let (ru, rv) = (find(&mut parent, u.0), find(&mut parent, v.0));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut edge_count = vec![0usize; n];
    let mut degree = vec![0usize; n];
    for e in class_edges {
        let (u, v) = e.endpoints();
        edge_count[find(&mut parent, u.0)] += 1;
        degree[u.0] += 1;
        degree[v.0] += 1;
    }
    let mut all_degree_two = vec![true; n];
    for v in 0..n {
        if degree[v] > 0 && degree[v] != 2 {
            all_degree_two[find(&mut parent, v)] = false;
        }
    }
    let mut vertex_count = vec![0usize; n];
    for v in 0..n {
        if degree[v] > 0 {
            vertex_count[find(&mut parent, v)] += 1;
        }
    }
    let mut infos: Vec<ComponentInfo> = (0..n)
        .filter(|&r| edge_count[r] > 0)
        .map(|r| ComponentInfo {
            edge_count: edge_count[r],
            // a connected subgraph is a cycle iff every vertex has degree 2
            // (equivalently, edges == vertices)
            is_cycle: all_degree_two[r] && edge_count[r] == vertex_count[r],
        })
        .collect();
    infos.sort();
    infos
}

/// Outcome of propagating the degree-3 rule at one vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Propagation {
    NoOp,
    Forced { edge: Edge, color: Color },
    Contradiction,
}

/// At a degree-3 vertex every pair of incident edges shares a face, so all
/// three incident edges must take distinct colors: two assigned colors
/// determine the third, and a repeated color is an immediate contradiction.
pub fn degree3_forcing(
    t: &PlaneTriangulation,
    partial: &EdgeColoring,
    v: VertexId,
) -> Propagation {
    assert_eq!(t.degree(v), 3, "degree3_forcing needs a degree-3 vertex");
    let incident: Vec<(Edge, Option<Color>)> = t
        .rotation_of(v)
        .iter()
        .map(|&u| {
            let e = Edge::new(v, u);
            (e, partial.get(e).expect("incident edges exist"))
        })
        .collect();
    let assigned: Vec<Color> = incident.iter().filter_map(|&(_, c)| c).collect();
    let mut distinct = assigned.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < assigned.len() {
        return Propagation::Contradiction;
    }
    if assigned.len() == 2 {
        let (edge, _) = incident
            .iter()
            .find(|(_, c)| c.is_none())
            .expect("exactly one unassigned");
        let color = Color::ALL
            .into_iter()
            .find(|c| !assigned.contains(c))
            .expect("two assigned leave one color");
        return Propagation::Forced { edge: *edge, color };
    }
    Propagation::NoOp
}
