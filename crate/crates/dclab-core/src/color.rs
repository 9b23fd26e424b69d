//! Exact k-colorability and chromatic number, generalized Kempe chains, and
//! prescribed-color-sequence path finding.
//!
//! The solver is a DSATUR-ordered branch-and-bound: vertices are explored by
//! maximum saturation with index tie-break, and a fresh color is only ever
//! introduced as the next unused index, so runs are reproducible and the
//! returned witnesses are stable.

use crate::graph::{bits, Graph};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    MismatchedOrder { expected: usize, got: usize },
    #[error("color {color} out of range for k = {k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("coloring is not proper: vertices {u} and {v} are adjacent and share a color")]
    Improper { u: usize, v: usize },
    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },
    #[error("color sequence contains a repeat")]
    RepeatedColor,
    #[error("cyclic permutation needs at least 2 distinct colors")]
    BadCycle,
    #[error("cycle length {len} out of range (need 3 <= length <= n)")]
    BadCycleLength { len: usize },
}

/// A proper vertex coloring with colors drawn from `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    k: usize,
    assign: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, assign: Vec<usize>) -> Result<Self, ColorError> {
        if let Some(&c) = assign.iter().find(|&&c| c >= k) {
            return Err(ColorError::ColorOutOfRange { color: c, k });
        }
        Ok(Coloring { k, assign })
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.assign[v]
    }

    pub fn assignments(&self) -> &[usize] {
        &self.assign
    }

    /// Checks properness against `g` (also requires matching order).
    pub fn check_proper_on(&self, g: &Graph) -> Result<(), ColorError> {
        if self.assign.len() != g.n() {
            return Err(ColorError::MismatchedOrder {
                expected: g.n(),
                got: self.assign.len(),
            });
        }
        for (u, v) in g.edges() {
            if self.assign[u] == self.assign[v] {
                return Err(ColorError::Improper { u, v });
            }
        }
        Ok(())
    }

    pub fn is_proper_on(&self, g: &Graph) -> bool {
        self.check_proper_on(g).is_ok()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut mask = 0u64;
        for &c in &self.assign {
            mask |= 1 << c;
        }
        mask.count_ones() as usize
    }

    /// Relabels colors so the first occurrence of each color (in vertex
    /// order) gets the smallest unused index. Keeps `k`.
    pub fn canonicalize(mut self) -> Self {
        let mut map = vec![usize::MAX; self.k];
        let mut next = 0;
        for c in &mut self.assign {
            if map[*c] == usize::MAX {
                map[*c] = next;
                next += 1;
            }
            *c = map[*c];
        }
        self
    }
}

/// A cyclic permutation of colors: `(j0, j1, ..., ji)` sends each listed
/// color to the next and the last back to the first; all other colors are
/// fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicColorPermutation {
    cycle: Vec<usize>,
}

impl CyclicColorPermutation {
    pub fn new(cycle: Vec<usize>) -> Result<Self, ColorError> {
        if cycle.len() < 2 {
            return Err(ColorError::BadCycle);
        }
        let mut seen = std::collections::HashSet::new();
        if !cycle.iter().all(|c| seen.insert(*c)) {
            return Err(ColorError::RepeatedColor);
        }
        Ok(CyclicColorPermutation { cycle })
    }

    pub fn apply(&self, color: usize) -> usize {
        match self.cycle.iter().position(|&c| c == color) {
            Some(i) => self.cycle[(i + 1) % self.cycle.len()],
            None => color,
        }
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn max_color(&self) -> usize {
        *self.cycle.iter().max().expect("cycle is non-empty")
    }
}

/// Returns a proper `k`-coloring if one exists. Deterministic: DSATUR vertex
/// order (max saturation, smallest index on ties) and a new color is only
/// introduced as the smallest unused index. The witness is canonicalized.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring {
            k,
            assign: Vec::new(),
        });
    }
    if k == 0 {
        return None;
    }
    let k = k.min(n); // more than n colors never helps
    let mut assign = vec![usize::MAX; n];
    let mut forbidden = vec![0u64; n]; // colors already on colored neighbors
    if color_rec(g, k, &mut assign, &mut forbidden, 0, 0) {
        Some(Coloring { k, assign }.canonicalize())
    } else {
        None
    }
}

fn color_rec(
    g: &Graph,
    k: usize,
    assign: &mut [usize],
    forbidden: &mut [u64],
    colored: usize,
    used: usize,
) -> bool {
    let n = g.n();
    if colored == n {
        return true;
    }
    // DSATUR choice: maximum saturation, smallest index wins ties.
    let mut v = usize::MAX;
    let mut best = usize::MAX;
    for u in 0..n {
        if assign[u] == usize::MAX {
            let sat = forbidden[u].count_ones() as usize;
            if v == usize::MAX || sat > best {
                v = u;
                best = sat;
            }
        }
    }
    let limit = k.min(used + 1);
    for c in 0..limit {
        if forbidden[v] & (1 << c) != 0 {
            continue;
        }
        assign[v] = c;
        let mut touched = 0u64;
        for w in bits(g.neighbors(v)) {
            if assign[w] == usize::MAX && forbidden[w] & (1 << c) == 0 {
                forbidden[w] |= 1 << c;
                touched |= 1 << w;
            }
        }
        if color_rec(g, k, assign, forbidden, colored + 1, used.max(c + 1)) {
            return true;
        }
        for w in bits(touched) {
            forbidden[w] &= !(1 << c);
        }
        assign[v] = usize::MAX;
    }
    false
}

/// Greedy clique by descending degree; a lower bound seed for the solver.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    let mut common = g.vertex_mask();
    for v in order {
        if common & (1 << v) != 0 {
            clique.push(v);
            common &= g.neighbors(v);
        }
    }
    clique
}

/// Greedy DSATUR coloring (no backtracking); an upper bound for the solver.
fn dsatur_upper_bound(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut assign = vec![usize::MAX; n];
    let mut forbidden = vec![0u64; n];
    let mut used = 0usize;
    for _ in 0..n {
        let mut v = usize::MAX;
        let mut best = usize::MAX;
        for u in 0..n {
            if assign[u] == usize::MAX {
                let sat = forbidden[u].count_ones() as usize;
                if v == usize::MAX || sat > best {
                    v = u;
                    best = sat;
                }
            }
        }
        let c = (0..)
            .find(|&c| forbidden[v] & (1u64 << c) == 0)
            .expect("some color fits");
        assign[v] = c;
        used = used.max(c + 1);
        for w in bits(g.neighbors(v)) {
            forbidden[w] |= 1 << c;
        }
    }
    used
}

/// Exact chromatic number: clique lower bound, DSATUR upper bound, then the
/// gap is closed by confirming each candidate with [`is_k_colorable`].
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let lb = greedy_clique(g).len().max(1);
    let ub = dsatur_upper_bound(g);
    for k in lb..ub {
        if is_k_colorable(g, k).is_some() {
            return k;
        }
    }
    ub
}

/// The generalized Kempe chain from `x` w.r.t. a proper coloring and a
/// cyclic color permutation: the least fixed point of "layer j+1 holds the
/// neighbours of layer j whose color is the (j+1)-st image of `c(x)`".
/// Returned as a sorted vertex list (always contains `x`).
pub fn kempe_chain(
    g: &Graph,
    c: &Coloring,
    x: usize,
    pi: &CyclicColorPermutation,
) -> Result<Vec<usize>, ColorError> {
    c.check_proper_on(g)?;
    debug_assert!(x < g.n());
    let start = c.color(x);
    // Orbit of c(x) under pi; colors outside the orbit can never join.
    let mut orbit = vec![start];
    let mut cur = pi.apply(start);
    while cur != start {
        orbit.push(cur);
        cur = pi.apply(cur);
    }
    if orbit.len() == 1 {
        return Ok(vec![x]);
    }
    // A vertex's color pins its unique layer residue, so a plain worklist
    // over vertices computes the fixed point.
    let residue_of = |color: usize| orbit.iter().position(|&c| c == color);
    let mut chain = 1u64 << x;
    let mut work = vec![x];
    while let Some(v) = work.pop() {
        let r = residue_of(c.color(v)).expect("chain vertices have orbit colors");
        let want = orbit[(r + 1) % orbit.len()];
        for w in bits(g.neighbors(v) & !chain) {
            if c.color(w) == want {
                chain |= 1 << w;
                work.push(w);
            }
        }
    }
    let result: Vec<usize> = bits(chain).collect();
    debug_assert!(recolor_chain(g, c, &result, pi).is_proper_on(g));
    Ok(result)
}

/// Recolors every chain vertex `y` to `pi(c(y))`. For a chain produced by
/// [`kempe_chain`] the result is again proper; this is asserted.
pub fn recolor_chain(
    g: &Graph,
    c: &Coloring,
    chain: &[usize],
    pi: &CyclicColorPermutation,
) -> Coloring {
    let mut assign = c.assignments().to_vec();
    for &v in chain {
        assign[v] = pi.apply(assign[v]);
    }
    let k = c.k().max(pi.max_color() + 1);
    let out = Coloring { k, assign };
    assert!(out.is_proper_on(g), "Kempe recoloring must stay proper");
    out
}

/// Looks for a path `x, v1, ..., vi, y` where `coloring` (a proper coloring
/// of `g - x - y`) gives `v_t` the color `seq[t-1]`. Path vertices are
/// reported with their labels in `g`.
pub fn prescribed_color_path(
    g: &Graph,
    coloring: &Coloring,
    x: usize,
    y: usize,
    seq: &[usize],
) -> Result<Option<Vec<usize>>, ColorError> {
    if !g.has_edge(x, y) {
        return Err(ColorError::NotAnEdge { u: x, v: y });
    }
    let mut seen = std::collections::HashSet::new();
    if !seq.iter().all(|c| seen.insert(*c)) {
        return Err(ColorError::RepeatedColor);
    }
    let deleted = g.removing(&[x, y]);
    coloring.check_proper_on(&deleted)?;
    // Colors per original vertex; x and y stay None.
    let mut color_of: Vec<Option<usize>> = vec![None; g.n()];
    for (idx, v) in g.vertices().filter(|&v| v != x && v != y).enumerate() {
        color_of[v] = Some(coloring.color(idx));
    }
    let mut path = vec![x];
    if path_rec(g, &color_of, y, seq, &mut path, 1u64 << x | 1u64 << y) {
        path.push(y);
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn path_rec(
    g: &Graph,
    color_of: &[Option<usize>],
    y: usize,
    seq: &[usize],
    path: &mut Vec<usize>,
    visited: u64,
) -> bool {
    let cur = *path.last().expect("path starts at x");
    if path.len() == seq.len() + 1 {
        return g.has_edge(cur, y);
    }
    let want = seq[path.len() - 1];
    for w in bits(g.neighbors(cur) & !visited) {
        if color_of[w] == Some(want) {
            path.push(w);
            if path_rec(g, color_of, y, seq, path, visited | 1 << w) {
                return true;
            }
            path.pop();
        }
    }
    false
}

/// Exact number of distinct cycles of the given length through the edge
/// `xy`, by exhaustive extension of simple paths from `x` to `y`.
pub fn count_cycles_through_edge(
    g: &Graph,
    x: usize,
    y: usize,
    length: usize,
) -> Result<u64, ColorError> {
    if !g.has_edge(x, y) {
        return Err(ColorError::NotAnEdge { u: x, v: y });
    }
    if length < 3 || length > g.n() {
        return Err(ColorError::BadCycleLength { len: length });
    }
    Ok(count_paths(g, x, y, length - 1, 1u64 << x))
}

fn count_paths(g: &Graph, cur: usize, y: usize, remaining: usize, visited: u64) -> u64 {
    if remaining == 0 {
        return u64::from(cur == y);
    }
    let mut total = 0;
    for w in bits(g.neighbors(cur) & !visited) {
        if w == y && remaining != 1 {
            continue; // y may only be the terminal vertex
        }
        total += count_paths(g, w, y, remaining - 1, visited | 1 << w);
    }
    total
}
