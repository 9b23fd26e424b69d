//! Exact algorithms for small simple graphs (n <= 62): chromatic numbers,
//! double-critical edges, Kempe chains, clique minors with certificates,
//! vertex connectivity, and the structural property suite built on them.
//!
//! Everything here is exact and deterministic: identical inputs produce
//! identical outputs, and every search is exhaustive (optionally bounded by
//! an explicit step budget). Graphs are immutable bitset-adjacency values
//! that are cheap to clone and safe to share across worker threads.

#![forbid(unsafe_code)]

pub mod color;
pub mod critical;
pub mod graph;
pub mod minor;
pub mod structure;

pub use color::{chromatic_number, is_k_colorable, Coloring, CyclicColorPermutation};
pub use graph::{build, parse_graph6, parse_spec, write_graph6, Graph, GraphError, GraphSpec};
