//! Enumeration of sphere triangulations and their rainbow edge colorings.
//!
//! The library enumerates all triangulations of the 2-sphere with up to 11
//! vertices modulo isomorphism (mirror images identified), and counts the
//! colorings of each triangulation's edges in three colors such that every
//! triangular face has three distinctly colored sides, up to renaming of
//! the colors.
//!
//! Modules:
//! - [`plane_map`]: rotation-system representation with validation;
//! - [`generator`]: the three vertex-insertion procedures and the
//!   breadth-first enumeration from the tetrahedron;
//! - [`canonical`]: canonical codes and isomorphism testing;
//! - [`tricolor`]: rainbow three-edge-colorings and their class summaries;
//! - [`oracle`]: independent brute-force verifiers for small instances.
//!
//! Every type is immutable after construction and every operation is a pure
//! function, so values can be shared and sent across threads freely; all
//! results are deterministic.

pub mod canonical;
pub mod generator;
pub mod oracle;
pub mod plane_map;
pub mod tricolor;

pub use canonical::{canonical_code, is_isomorphic, CanonicalCode};
pub use generator::{enumerate, enumerate_with, EnumerationConfig, EnumerationResult};
pub use plane_map::{Edge, Face, PlaneTriangulation, VertexId};
pub use tricolor::{count_colorings, enumerate_colorings, Color, EdgeColoring};
