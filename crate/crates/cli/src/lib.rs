//! Library side of the `trisphere` command-line tool: text formats and the
//! verification checks, kept out of `main.rs` so tests can call them
//! directly.

pub mod checks;
pub mod format;
