//! Canonical labeling of plane triangulations.
//!
//! The code of a rooted triangulation is built by breadth-first traversal
//! from a directed root edge: vertices are relabeled in first-visit order,
//! and each vertex emits its rotation rewritten in new labels, starting from
//! the neighbor it was entered from, followed by a separator byte. The
//! canonical code is the lexicographic minimum over all 2E directed-edge
//! roots, and (by default) over the mirrored embedding as well, so that
//! left- and right-handed variants compare equal. For 3-connected planar
//! triangulations the embedding is unique up to reflection (Whitney), so
//! equal codes coincide with graph isomorphism.

use std::fmt;

use crate::plane_map::{PlaneTriangulation, VertexId};

const SEPARATOR: u8 = 0xff;

/// Total-order key identifying a triangulation up to isomorphism
/// (reflection included). Its length depends on n alone: n separators plus
/// 6n - 12 neighbor labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode {
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Lowercase hexadecimal form; equal codes give equal strings.
    pub fn hex(&self) -> String {
        let mut s = String::with_capacity(2 * self.bytes.len());
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    /// Short prefix of the hex form, used as a graph id in reports.
    pub fn hex_prefix(&self, chars: usize) -> String {
        let mut s = self.hex();
        s.truncate(chars);
        s
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

/// Breadth-first relabeling code rooted at the directed edge `root -> head`.
fn rooted_code(t: &PlaneTriangulation, root: VertexId, head: VertexId, out: &mut Vec<u8>) {
    let n = t.n();
    out.clear();
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![VertexId(usize::MAX); n];
    let mut order = Vec::with_capacity(n);
    label[root.0] = 0;
    entry[root.0] = head;
    order.push(root);
    let mut next = 1;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let nbrs = t.rotation_of(v);
        let start = nbrs
            .iter()
            .position(|&x| x == entry[v.0])
            .expect("entry neighbor is in the rotation");
        for j in 0..nbrs.len() {
            let w = nbrs[(start + j) % nbrs.len()];
            if label[w.0] == usize::MAX {
                label[w.0] = next;
                next += 1;
                entry[w.0] = v;
                order.push(w);
            }
            out.push(label[w.0] as u8);
        }
        out.push(SEPARATOR);
        i += 1;
    }
    debug_assert_eq!(order.len(), n, "triangulations are connected");
}

fn min_code_over_roots(t: &PlaneTriangulation, best: &mut Option<Vec<u8>>) {
    let mut buf = Vec::new();
    for v in t.vertices() {
        for &u in t.rotation_of(v) {
            rooted_code(t, v, u, &mut buf);
            match best {
                Some(b) if *b <= buf => {}
                _ => *best = Some(buf.clone()),
            }
        }
    }
}

/// Canonical code with mirror images identified (the default convention;
/// all reference counts assume it).
pub fn canonical_code(t: &PlaneTriangulation) -> CanonicalCode {
    canonical_code_with(t, true)
}

/// Canonical code, optionally keeping chirality: with
/// `include_mirror = false` two mirror-image embeddings may get different
/// codes.
pub fn canonical_code_with(t: &PlaneTriangulation, include_mirror: bool) -> CanonicalCode {
    let mut best = None;
    min_code_over_roots(t, &mut best);
    if include_mirror {
        min_code_over_roots(&t.mirror(), &mut best);
    }
    CanonicalCode {
        bytes: best.expect("at least one root"),
    }
}

/// True iff the two triangulations are isomorphic, reflections allowed.
pub fn is_isomorphic(t1: &PlaneTriangulation, t2: &PlaneTriangulation) -> bool {
    t1.n() == t2.n() && canonical_code(t1) == canonical_code(t2)
}

/// Equal degree multisets: a cheap necessary condition for isomorphism.
pub fn degree_filter(t1: &PlaneTriangulation, t2: &PlaneTriangulation) -> bool {
    t1.degree_multiset() == t2.degree_multiset()
}
