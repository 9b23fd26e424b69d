//! Batch front end for the graph laboratory: built-in exhaustive
//! small-graph enumeration with isomorphism dedup, the double-critical
//! search, and the suite runner behind the `dclab` binary.

#![forbid(unsafe_code)]

pub mod enumerate;
pub mod search;
pub mod suite;

pub use enumerate::{canonical_form, canonical_key, enumerate_graphs};
pub use search::{search_double_critical, DoubleCriticalFinding};
pub use suite::{run_suite, Command, OutputFormat, RunConfig};
