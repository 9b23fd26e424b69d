//! Compact simple-graph representation and exact structural primitives.
//!
//! A [`Graph`] stores one `u64` neighbour bitset per vertex, which caps the
//! order at 62, exactly the range covered by a single-byte graph6 size
//! field, and comfortably above everything the search routines need.
//! Vertices are always the dense range `0..n`.

use serde::Serialize;
use thiserror::Error;

/// Hard cap on the number of vertices (single-byte graph6, one-word rows).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("invalid construction parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("vertex set does not induce a connected subgraph")]
    DisconnectedSet,
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: unsupported size header (only 1 <= n <= 62 is supported)")]
    Graph6BadSize,
    #[error("graph6: byte {byte:#04x} at position {pos} is not a printable graph6 character")]
    Graph6BadByte { byte: u8, pos: usize },
    #[error("graph6: expected {expected} bytes for order {n}, found {found}")]
    Graph6BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6: padding bits after the adjacency data are not zero")]
    Graph6TrailingBits,
    #[error("spec string: {0}")]
    BadSpecString(String),
}

/// Simple undirected graph on at most 62 vertices, bit-matrix adjacency.
///
/// Invariants (maintained by every constructor and operation): no self-loops,
/// symmetric adjacency, vertices are `0..n`. Values are immutable once built;
/// all operations return fresh graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask as vertex indices.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices. The order-0 graph is permitted as a
    /// value (it arises as a deletion result); I/O and constructions require
    /// `n >= 1`.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::InvalidParameter(format!("self-loop at {u}")));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::new(n)?;
        for v in 0..n {
            let w = (v + 1) % n;
            g.adj[v] |= bit(w);
            g.adj[w] |= bit(v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidParameter(
                "path needs at least 1 vertex".into(),
            ));
        }
        let mut g = Graph::new(n)?;
        for v in 0..n.saturating_sub(1) {
            g.adj[v] |= bit(v + 1);
            g.adj[v + 1] |= bit(v);
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9,
    /// spokes i -- i+5.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("petersen is well-formed")
    }

    /// Join: both factors plus every edge between them. `a`'s vertices keep
    /// their labels, `b`'s are shifted by `a.n()`.
    pub fn join(a: &Graph, b: &Graph) -> Result<Self, GraphError> {
        let n = a.n + b.n;
        let mut g = Graph::new(n)?;
        let a_mask = if a.n == 0 { 0 } else { (1u64 << a.n) - 1 };
        let b_mask = if n == a.n {
            0
        } else {
            ((1u64 << n) - 1) & !a_mask
        };
        for v in 0..a.n {
            g.adj[v] = a.adj[v] | b_mask;
        }
        for v in 0..b.n {
            g.adj[a.n + v] = (b.adj[v] << a.n) | a_mask;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    /// Open neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    /// Closed neighbourhood of `v` as a bitset.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All vertices as a bitset.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected component containing `start`, as a bitset.
    pub fn component_of(&self, start: usize) -> u64 {
        debug_assert!(start < self.n);
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as bitsets, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.component_of(v) & remaining;
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    /// The order-0 and order-1 graphs count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0).count_ones() as usize == self.n
    }

    /// True if the vertices of `mask` induce a connected subgraph (an empty
    /// mask counts as connected).
    pub fn is_connected_subset(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask
    }

    /// Complement; an involution that never touches the diagonal.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Contracts the edge `uv`. The merged vertex takes the lower of the two
    /// indices and is adjacent to `N(u) ∪ N(v) \ {u, v}`; the higher index is
    /// removed and later vertices are relabelled densely.
    pub fn contract(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let (keep, drop) = (u.min(v), u.max(v));
        let mut rows = self.adj.clone();
        let merged = (rows[keep] | rows[drop]) & !bit(keep) & !bit(drop);
        rows[keep] = merged;
        for row in &mut rows {
            if *row & bit(drop) != 0 {
                *row = (*row & !bit(drop)) | bit(keep);
            }
        }
        rows[keep] &= !bit(keep);
        // Drop the vacated slot and shift indices above it down by one.
        rows.remove(drop);
        let low = bit(drop) - 1;
        for row in &mut rows {
            let lo = *row & low;
            let hi = (*row & !low & !bit(drop)) >> 1;
            *row = lo | hi;
        }
        Ok(Graph {
            n: self.n - 1,
            adj: rows,
        })
    }

    /// Contracts a connected vertex set into its lowest-index member.
    pub fn contract_set(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let mut mask = 0u64;
        for &v in set {
            self.check_vertex(v)?;
            mask |= bit(v);
        }
        if mask == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        if !self.is_connected_subset(mask) {
            return Err(GraphError::DisconnectedSet);
        }
        let keep = mask.trailing_zeros() as usize;
        let mut g = self.clone();
        // Repeatedly contract an edge from the kept vertex into the set; the
        // set stays connected so such an edge always exists.
        let mut remaining: Vec<usize> = bits(mask & !bit(keep)).collect();
        while !remaining.is_empty() {
            let pos = remaining
                .iter()
                .position(|&v| g.has_edge(keep, v))
                .expect("connected set always offers a contractible edge");
            let v = remaining.swap_remove(pos);
            g = g.contract(keep, v)?;
            // Indices above v shift down by one.
            for w in &mut remaining {
                if *w > v {
                    *w -= 1;
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on a non-empty vertex set; vertices are relabelled
    /// densely in increasing order of their old labels.
    pub fn induced(&self, set: &[usize]) -> Result<Graph, GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut mask = 0u64;
        for &v in set {
            self.check_vertex(v)?;
            mask |= bit(v);
        }
        Ok(self.induced_mask(mask))
    }

    /// Induced subgraph on a bitset (may be empty, yielding the order-0 graph).
    pub fn induced_mask(&self, mask: u64) -> Graph {
        debug_assert_eq!(mask & !self.vertex_mask(), 0);
        let verts: Vec<usize> = bits(mask).collect();
        let mut g = Graph::new(verts.len()).expect("subset of a valid graph fits");
        for (new_u, &old_u) in verts.iter().enumerate() {
            for (new_v, &old_v) in verts.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    g.adj[new_u] |= bit(new_v);
                    g.adj[new_v] |= bit(new_u);
                }
            }
        }
        g
    }

    /// The neighbourhood graph of `x`: the subgraph induced by `N(x)`.
    pub fn neighborhood_graph(&self, x: usize) -> Result<Graph, GraphError> {
        self.check_vertex(x)?;
        Ok(self.induced_mask(self.adj[x]))
    }

    /// Deletes edges (vertices stay). Pairs that are not edges are ignored.
    pub fn removing_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            debug_assert!(u < self.n && v < self.n);
            g.adj[u] &= !bit(v);
            g.adj[v] &= !bit(u);
        }
        g
    }

    /// Deletes a set of vertices; the result may be the order-0 graph.
    /// Remaining vertices are relabelled densely, preserving relative order.
    pub fn removing(&self, verts: &[usize]) -> Graph {
        let mut mask = self.vertex_mask();
        for &v in verts {
            debug_assert!(v < self.n);
            mask &= !bit(v);
        }
        self.induced_mask(mask)
    }
}

// ---------------------------------------------------------------------------
// graph6 codec
// ---------------------------------------------------------------------------

/// Encodes a graph as one graph6 line (without the trailing newline):
/// size byte `n + 63`, then the upper-triangle bits x(0,1), x(0,2), x(1,2),
/// x(0,3), ... packed big-endian into 6-bit groups, each group `+ 63`,
/// zero-padded to a 6-bit boundary.
pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::Graph6BadSize);
    }
    let mut out = Vec::with_capacity(1 + n * (n - 1) / 12 + 1);
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses one graph6 line (leading/trailing whitespace tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).trim().as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6BadByte { byte: b, pos });
        }
    }
    // 126 ('~') introduces a multi-byte size field for n > 62: out of scope.
    if bytes[0] == 126 {
        return Err(GraphError::Graph6BadSize);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::Graph6BadSize);
    }
    let nbits = n * (n - 1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(GraphError::Graph6BadLength {
            n,
            expected,
            found: bytes.len(),
        });
    }
    let mut g = Graph::new(n)?;
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + pos / 6] - 63;
            if byte >> (5 - pos % 6) & 1 != 0 {
                g.adj[u] |= bit(v);
                g.adj[v] |= bit(u);
            }
            pos += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    if !nbits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(GraphError::Graph6TrailingBits);
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

/// Recipe for a named graph. `H { k, ell }` is the complete (k-6)-graph
/// joined completely with two disjoint copies of the odd cycle C_ell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GraphSpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// Hub joined to a rim cycle; `rim` is the cycle length.
    Wheel {
        rim: usize,
    },
    Join(Box<GraphSpec>, Box<GraphSpec>),
    H {
        k: usize,
        ell: usize,
    },
    Complement(Box<GraphSpec>),
}

impl GraphSpec {
    /// Order of the described graph (before the 62-vertex cap is enforced).
    pub fn order(&self) -> usize {
        match self {
            GraphSpec::Complete(n) | GraphSpec::Cycle(n) | GraphSpec::Path(n) => *n,
            GraphSpec::Wheel { rim } => rim + 1,
            GraphSpec::Join(a, b) => a.order() + b.order(),
            GraphSpec::H { k, ell } => k - 6 + 2 * ell,
            GraphSpec::Complement(s) => s.order(),
        }
    }
}

/// Builds the described graph, validating parameters and the size cap.
pub fn build(spec: &GraphSpec) -> Result<Graph, GraphError> {
    match spec {
        GraphSpec::Complete(n) => {
            if *n == 0 {
                return Err(GraphError::InvalidParameter(
                    "complete graph needs n >= 1".into(),
                ));
            }
            Graph::complete(*n)
        }
        GraphSpec::Cycle(n) => Graph::cycle(*n),
        GraphSpec::Path(n) => Graph::path(*n),
        GraphSpec::Wheel { rim } => {
            let hub = Graph::complete(1)?;
            Graph::join(&hub, &Graph::cycle(*rim)?)
        }
        GraphSpec::Join(a, b) => {
            let order = a.order() + b.order();
            if order > MAX_VERTICES {
                return Err(GraphError::TooManyVertices { n: order });
            }
            Graph::join(&build(a)?, &build(b)?)
        }
        GraphSpec::H { k, ell } => {
            if *k < 6 {
                return Err(GraphError::InvalidParameter(format!(
                    "H(k,l) needs k >= 6, got k={k}"
                )));
            }
            if *ell < 5 || ell.is_multiple_of(2) {
                return Err(GraphError::InvalidParameter(format!(
                    "H(k,l) needs odd l >= 5, got l={ell}"
                )));
            }
            let order = k - 6 + 2 * ell;
            if order > MAX_VERTICES {
                return Err(GraphError::TooManyVertices { n: order });
            }
            let cycles = Graph::join(&Graph::cycle(*ell)?, &Graph::cycle(*ell)?)?;
            if *k == 6 {
                Ok(cycles)
            } else {
                Graph::join(&Graph::complete(k - 6)?, &cycles)
            }
        }
        GraphSpec::Complement(s) => Ok(build(s)?.complement()),
    }
}

/// Parses a compact construction string:
/// `K6`, `C5`, `P4`, `W5` (hub + rim length), `H(6,5)`, `join(C5,K2)`,
/// `complement(C7)`, with arbitrary nesting.
pub fn parse_spec(text: &str) -> Result<GraphSpec, GraphError> {
    let s = text.trim();
    let bad = |msg: &str| GraphError::BadSpecString(format!("{msg} in {s:?}"));
    if let Some(rest) = s.strip_prefix("join(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| bad("missing ')'"))?;
        let comma = split_top_level_comma(inner).ok_or_else(|| bad("join needs two arguments"))?;
        return Ok(GraphSpec::Join(
            Box::new(parse_spec(&inner[..comma])?),
            Box::new(parse_spec(&inner[comma + 1..])?),
        ));
    }
    if let Some(rest) = s.strip_prefix("complement(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| bad("missing ')'"))?;
        return Ok(GraphSpec::Complement(Box::new(parse_spec(inner)?)));
    }
    if let Some(rest) = s.strip_prefix("H(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| bad("missing ')'"))?;
        let comma = split_top_level_comma(inner).ok_or_else(|| bad("H needs two arguments"))?;
        let k = inner[..comma].trim().parse().map_err(|_| bad("bad k"))?;
        let ell = inner[comma + 1..]
            .trim()
            .parse()
            .map_err(|_| bad("bad l"))?;
        return Ok(GraphSpec::H { k, ell });
    }
    let (head, tail) = s.split_at(1.min(s.len()));
    let num = |t: &str| t.parse::<usize>().map_err(|_| bad("bad number"));
    match head {
        "K" => Ok(GraphSpec::Complete(num(tail)?)),
        "C" => Ok(GraphSpec::Cycle(num(tail)?)),
        "P" => Ok(GraphSpec::Path(num(tail)?)),
        "W" => Ok(GraphSpec::Wheel { rim: num(tail)? }),
        _ => Err(bad("unknown construction")),
    }
}

fn split_top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_match_expected_orders_and_sizes() {
        let k6 = build(&GraphSpec::Complete(6)).unwrap();
        assert_eq!((k6.n(), k6.m()), (6, 15));

        let h65 = build(&GraphSpec::H { k: 6, ell: 5 }).unwrap();
        assert_eq!((h65.n(), h65.m()), (10, 35));

        let j = build(&parse_spec("join(C5,K2)").unwrap()).unwrap();
        assert_eq!((j.n(), j.m()), (7, 16));
    }

    #[test]
    fn h_family_size_formula() {
        for (k, ell) in [(6, 5), (6, 7), (7, 5), (8, 5), (9, 7)] {
            let g = build(&GraphSpec::H { k, ell }).unwrap();
            let kk = k - 6;
            assert_eq!(g.n(), kk + 2 * ell);
            assert_eq!(
                g.m(),
                kk * (kk.saturating_sub(1)) / 2 + 2 * ell + kk * 2 * ell + ell * ell
            );
        }
    }

    #[test]
    fn h_family_rejects_bad_parameters() {
        assert!(build(&GraphSpec::H { k: 5, ell: 5 }).is_err());
        assert!(build(&GraphSpec::H { k: 6, ell: 4 }).is_err());
        assert!(build(&GraphSpec::H { k: 6, ell: 3 }).is_err());
        assert!(build(&GraphSpec::H { k: 60, ell: 31 }).is_err()); // order overflow
    }

    #[test]
    fn join_edge_count_law() {
        for (a, b) in [("C5", "K2"), ("P3", "C7"), ("K1", "C5"), ("C5", "C5")] {
            let ga = build(&parse_spec(a).unwrap()).unwrap();
            let gb = build(&parse_spec(b).unwrap()).unwrap();
            let j = Graph::join(&ga, &gb).unwrap();
            assert_eq!(j.m(), ga.m() + gb.m() + ga.n() * gb.n());
        }
    }

    #[test]
    fn complement_is_involution_and_c5_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.complement().complement(), c5);
        // Pentagon complement is again a 5-cycle on relabelled vertices.
        let cc = c5.complement();
        assert_eq!(cc.m(), 5);
        assert!(cc.vertices().all(|v| cc.degree(v) == 2));
        assert!(cc.is_connected());

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.complement().m(), 0);

        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.complement().m(), 14);
        assert!(c7
            .complement()
            .vertices()
            .all(|v| c7.complement().degree(v) == 4));
    }

    #[test]
    fn contract_k6_edge_gives_k5() {
        let k6 = Graph::complete(6).unwrap();
        let g = k6.contract(2, 4).unwrap();
        assert_eq!(g, Graph::complete(5).unwrap());
    }

    #[test]
    fn contract_nonedge_fails() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.contract(0, 2), Err(GraphError::NotAnEdge { u: 0, v: 2 }));
    }

    #[test]
    fn contract_petersen_spokes_gives_k5() {
        let mut g = Graph::petersen();
        // Contract (i, i+5) for i = 4,3,2,1,0; inner indices shift as we go,
        // but contracting from the top keeps lower indices stable.
        for i in (0..5).rev() {
            g = g.contract(i, i + 5).unwrap();
        }
        assert_eq!(g, Graph::complete(5).unwrap());
    }

    #[test]
    fn contract_set_collapses_path() {
        let p4 = Graph::path(4).unwrap();
        let g = p4.contract_set(&[1, 2]).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert!(p4.contract_set(&[0, 3]).is_err());
    }

    #[test]
    fn contraction_reduces_order_by_one_and_stays_simple() {
        let g = build(&parse_spec("join(C5,K2)").unwrap()).unwrap();
        for (u, v) in g.edges() {
            let h = g.contract(u, v).unwrap();
            assert_eq!(h.n(), g.n() - 1);
            for w in h.vertices() {
                assert!(!h.has_edge(w, w));
            }
        }
    }

    #[test]
    fn induced_and_neighborhood() {
        let k7 = Graph::complete(7).unwrap();
        assert_eq!(
            k7.neighborhood_graph(3).unwrap(),
            Graph::complete(6).unwrap()
        );

        let wheel = build(&GraphSpec::Wheel { rim: 5 }).unwrap();
        assert_eq!(
            wheel.neighborhood_graph(0).unwrap(),
            Graph::cycle(5).unwrap()
        );

        let pet = Graph::petersen();
        assert_eq!(
            pet.induced(&[0, 1, 2, 3, 4]).unwrap(),
            Graph::cycle(5).unwrap()
        );
        assert!(pet.induced(&[]).is_err());
    }

    #[test]
    fn removing_can_empty_the_graph() {
        let k2 = Graph::complete(2).unwrap();
        let g = k2.removing(&[0, 1]);
        assert_eq!(g.n(), 0);
        assert_eq!(g.m(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn graph6_known_values() {
        assert_eq!(write_graph6(&Graph::complete(1).unwrap()).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::complete(5).unwrap()).unwrap(), "D~{");
        assert_eq!(parse_graph6("@").unwrap(), Graph::complete(1).unwrap());
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph6("D~{").unwrap(), Graph::complete(5).unwrap());
    }

    #[test]
    fn graph6_rejects_malformed_input() {
        assert!(matches!(parse_graph6(""), Err(GraphError::Graph6Empty)));
        assert!(matches!(
            parse_graph6("~??"),
            Err(GraphError::Graph6BadSize)
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(GraphError::Graph6BadLength { .. })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(GraphError::Graph6BadLength { .. })
        ));
        assert!(matches!(
            parse_graph6("C\x1b"),
            Err(GraphError::Graph6BadByte { .. })
        ));
        // 'A' = n=2; '_' (0b100000) is K2 with clean padding, '@'+1 = 0b000001
        // sets only a padding bit.
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert!(matches!(
            parse_graph6("A@"),
            Err(GraphError::Graph6TrailingBits)
        ));
    }

    #[test]
    fn order_cap_boundaries() {
        let k62 = Graph::complete(62).unwrap();
        let line = write_graph6(&k62).unwrap();
        assert_eq!(parse_graph6(&line).unwrap(), k62);
        assert!(matches!(Graph::complete(63), Err(GraphError::TooManyVertices { n: 63 })));
        let c32 = Graph::cycle(32).unwrap();
        assert!(matches!(
            Graph::join(&c32, &c32),
            Err(GraphError::TooManyVertices { n: 64 })
        ));
        assert!(write_graph6(&Graph::new(0).unwrap()).is_err());
    }

    #[test]
    fn spec_strings_round_trip_through_build() {
        for (text, n, m) in [
            ("K6", 6, 15),
            ("C5", 5, 5),
            ("P4", 4, 3),
            ("W5", 6, 10),
            ("H(6,5)", 10, 35),
            ("join(C5,K2)", 7, 16),
            ("complement(C7)", 7, 14),
            ("join(K1,join(C5,C5))", 11, 45),
        ] {
            let g = build(&parse_spec(text).unwrap()).unwrap();
            assert_eq!((g.n(), g.m()), (n, m), "spec {text}");
        }
        assert!(parse_spec("Q5").is_err());
        assert!(parse_spec("join(C5)").is_err());
        assert!(parse_spec("K").is_err());
    }
}
