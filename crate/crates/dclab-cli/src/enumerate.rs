//! Exhaustive enumeration of small graphs, one representative per
//! isomorphism class.
//!
//! The canonical form of a graph is the minimum of its upper-triangle
//! adjacency bit-string over all vertex permutations, O(n!) per graph and
//! perfectly fine at the n <= 7 scale this supports. Enumeration proceeds
//! level by level: every class on n vertices arises by attaching a new
//! vertex to some class on n-1 vertices, so extending every representative
//! by every neighbourhood mask and dedupping by canonical key is complete.

use dclab_core::graph::{bits, Graph};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("built-in enumeration supports 1 <= n <= 7, got {0}")]
    OrderOutOfRange(usize),
}

/// Canonicalization walks all n! permutations; keep that bounded.
pub const CANONICAL_ORDER_CAP: usize = 8;

/// Position of the pair (u, v), u < v, in the column-major upper-triangle
/// order x(0,1), x(0,2), x(1,2), x(0,3), ...
#[inline]
fn pair_pos(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

/// The graph's own upper-triangle bit-string.
fn triangle_bits(g: &Graph) -> u64 {
    let mut key = 0u64;
    for (u, v) in g.edges() {
        key |= 1 << pair_pos(u, v);
    }
    key
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// For each permutation, where each triangle bit position lands.
fn permutation_bit_maps(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .map(|perm| {
            let mut map = vec![0usize; n * n.saturating_sub(1) / 2];
            for v in 1..n {
                for u in 0..v {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    map[pair_pos(u, v)] = pair_pos(a, b);
                }
            }
            map
        })
        .collect()
}

fn min_key_under(maps: &[Vec<usize>], base: u64) -> u64 {
    let mut best = u64::MAX;
    for map in maps {
        let mut key = 0u64;
        for p in bits(base) {
            key |= 1 << map[p];
        }
        if key < best {
            best = key;
        }
    }
    best
}

/// Minimum adjacency bit-string over all vertex permutations. Two graphs
/// are isomorphic exactly when their keys agree. Orders above
/// [`CANONICAL_ORDER_CAP`] are refused (n! blows up).
pub fn canonical_key(g: &Graph) -> u64 {
    assert!(
        g.n() <= CANONICAL_ORDER_CAP,
        "canonical form is all-permutations based and capped at n <= {CANONICAL_ORDER_CAP}"
    );
    if g.n() <= 1 {
        return 0;
    }
    min_key_under(&permutation_bit_maps(g.n()), triangle_bits(g))
}

fn key_to_graph(n: usize, key: u64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if key >> pair_pos(u, v) & 1 != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("triangle bits fit the order")
}

/// The canonically labelled representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    key_to_graph(g.n(), canonical_key(g))
}

/// Every isomorphism class of graphs on exactly `n` vertices (1 <= n <= 7),
/// canonically labelled, ordered by canonical key.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > 7 {
        return Err(EnumerateError::OrderOutOfRange(n));
    }
    let mut keys: Vec<u64> = vec![0]; // the one graph on a single vertex
    for level in 2..=n {
        let maps = permutation_bit_maps(level);
        let mut next = std::collections::HashSet::new();
        let base = level - 1; // the new vertex
        for &key in &keys {
            // New vertex `base` adjacent to each subset of the old vertices;
            // its pairs sit at consecutive positions after the old triangle.
            for mask in 0u64..(1 << base) {
                let mut child = key;
                for u in bits(mask) {
                    child |= 1 << pair_pos(u, base);
                }
                next.insert(min_key_under(&maps, child));
            }
        }
        keys = next.into_iter().collect();
        keys.sort_unstable();
    }
    Ok(keys.into_iter().map(|k| key_to_graph(n, k)).collect())
}
