//! Exhaustive search for double-critical graphs over the built-in
//! enumeration.

use crate::enumerate::{enumerate_graphs, EnumerateError};
use dclab_core::color::chromatic_number;
use dclab_core::critical::is_double_critical;
use dclab_core::graph::{write_graph6, Graph};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCriticalFinding {
    pub graph6: String,
    pub n: usize,
    pub chi: usize,
    pub is_complete: bool,
}

impl DoubleCriticalFinding {
    pub fn of(g: &Graph) -> Self {
        DoubleCriticalFinding {
            graph6: write_graph6(g).expect("searched graphs have 1 <= n <= 62"),
            n: g.n(),
            chi: chromatic_number(g),
            is_complete: g.is_complete(),
        }
    }
}

/// All double-critical graphs with at most `max_n` vertices, by exhaustive
/// enumeration (max_n <= 7). Cheap screens run first: double-critical
/// graphs are connected with minimum degree at least chi - 1.
pub fn search_double_critical(max_n: usize) -> Result<Vec<DoubleCriticalFinding>, EnumerateError> {
    if max_n == 0 || max_n > 7 {
        return Err(EnumerateError::OrderOutOfRange(max_n));
    }
    let mut findings = Vec::new();
    for n in 1..=max_n {
        for g in enumerate_graphs(n)? {
            if !g.is_connected() {
                continue;
            }
            let chi = chromatic_number(&g);
            if g.min_degree() + 1 < chi {
                continue;
            }
            if is_double_critical(&g) {
                findings.push(DoubleCriticalFinding::of(&g));
            }
        }
    }
    Ok(findings)
}
