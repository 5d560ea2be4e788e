//! Text formats: the one-line rotation format and DOT export.
//!
//! Rotation format, one triangulation per line:
//!
//! ```text
//! 4 | 0: 1,2,3 | 1: 0,3,2 | 2: 0,1,3 | 3: 0,2,1
//! ```
//!
//! Neighbors are listed in rotation order, vertices are 0-based. Parsing is
//! whitespace-tolerant; serialization is canonical (single spaces after `|`
//! and `:`, no spaces around commas) and round-trips bit-exactly. Parsing
//! runs full build validation.

use std::fmt::Write as _;

use thiserror::Error;

use trisphere::plane_map::{BuildError, PlaneTriangulation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty line")]
    Empty,
    #[error("bad vertex count {0:?}")]
    BadVertexCount(String),
    #[error("expected {expected} vertex sections, found {found}")]
    SectionCount { expected: usize, found: usize },
    #[error("section {section} has no ':' separator")]
    MissingColon { section: usize },
    #[error("section {section} is labeled {found:?}, expected vertex {expected}")]
    WrongIndex {
        section: usize,
        expected: usize,
        found: String,
    },
    #[error("bad neighbor {0:?}")]
    BadNeighbor(String),
    #[error("invalid triangulation: {0}")]
    Invalid(#[from] BuildError),
}

/// Canonical one-line form of a rotation table.
pub fn serialize_rotation(t: &PlaneTriangulation) -> String {
    let mut out = String::new();
    write!(out, "{}", t.n()).unwrap();
    for (v, nbrs) in t.rotation_table().into_iter().enumerate() {
        write!(out, " | {v}: ").unwrap();
        for (i, u) in nbrs.into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{u}").unwrap();
        }
    }
    out
}

/// Parses one line of the rotation format and validates the triangulation.
pub fn parse_rotation(line: &str) -> Result<PlaneTriangulation, ParseError> {
    let line = line.trim();
    if line.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut sections = line.split('|').map(str::trim);
    let head = sections.next().expect("split yields at least one item");
    let n: usize = head
        .parse()
        .map_err(|_| ParseError::BadVertexCount(head.to_string()))?;
    let sections: Vec<&str> = sections.collect();
    if sections.len() != n {
        return Err(ParseError::SectionCount {
            expected: n,
            found: sections.len(),
        });
    }
    let mut table = Vec::with_capacity(n);
    for (v, section) in sections.into_iter().enumerate() {
        let (label, nbrs) = section
            .split_once(':')
            .ok_or(ParseError::MissingColon { section: v })?;
        let label = label.trim();
        if label.parse::<usize>() != Ok(v) {
            return Err(ParseError::WrongIndex {
                section: v,
                expected: v,
                found: label.to_string(),
            });
        }
        let mut row = Vec::new();
        for tok in nbrs.split(',') {
            let tok = tok.trim();
            row.push(
                tok.parse::<usize>()
                    .map_err(|_| ParseError::BadNeighbor(tok.to_string()))?,
            );
        }
        table.push(row);
    }
    Ok(PlaneTriangulation::build(table)?)
}

/// DOT block for one triangulation: every edge once, faces as comments.
pub fn dot_graph(t: &PlaneTriangulation, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    let mut faces_line = String::from("  // faces:");
    for f in t.faces() {
        write!(faces_line, " {f}").unwrap();
    }
    writeln!(out, "{faces_line}").unwrap();
    for e in t.edges() {
        let (u, v) = e.endpoints();
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
