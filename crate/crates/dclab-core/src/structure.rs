//! Structural machinery around an edge or a vertex: the A/B/C/D partition of
//! the vertex set relative to an edge, exact independence and clique numbers,
//! complement classification of neighbourhood graphs, vertex connectivity via
//! vertex-disjoint paths, minimal-size separators, and the property suite
//! that evaluates the whole battery of double-critical facts on one graph.

use crate::color::{
    chromatic_number, count_cycles_through_edge, is_k_colorable, prescribed_color_path,
};
use crate::critical::is_double_critical;
use crate::graph::{bits, Graph};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("complete graphs have no separating set")]
    CompleteGraph,
    #[error("separator enumeration is capped at n <= {cap}, graph has {n} vertices")]
    TooLargeForSeparators { n: usize, cap: usize },
}

/// Exhaustive separator enumeration walks all C(n, kappa) subsets; this cap
/// keeps that tractable.
pub const SEPARATOR_ENUMERATION_CAP: usize = 14;

// ---------------------------------------------------------------------------
// Edge neighbourhood partition
// ---------------------------------------------------------------------------

/// For an edge `xy`: `a = N(x)\N[y]`, `b = N(x) ∩ N(y)` (the common
/// neighbourhood), `c = N(y)\N[x]`, `d` = everything else except x and y.
/// Together with `{x}` and `{y}` these partition the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeNeighborhoodPartition {
    pub x: usize,
    pub y: usize,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl EdgeNeighborhoodPartition {
    pub fn a_vertices(&self) -> Vec<usize> {
        bits(self.a).collect()
    }
    pub fn b_vertices(&self) -> Vec<usize> {
        bits(self.b).collect()
    }
    pub fn c_vertices(&self) -> Vec<usize> {
        bits(self.c).collect()
    }
    pub fn d_vertices(&self) -> Vec<usize> {
        bits(self.d).collect()
    }
}

pub fn edge_partition(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<EdgeNeighborhoodPartition, StructureError> {
    if x >= g.n() || y >= g.n() || !g.has_edge(x, y) {
        return Err(StructureError::NotAnEdge { u: x, v: y });
    }
    let nx = g.neighbors(x);
    let ny = g.neighbors(y);
    let a = nx & !ny & !(1 << y);
    let b = nx & ny;
    let c = ny & !nx & !(1 << x);
    let d = g.vertex_mask() & !nx & !ny & !(1 << x) & !(1 << y);
    Ok(EdgeNeighborhoodPartition { x, y, a, b, c, d })
}

// ---------------------------------------------------------------------------
// Clique and independence numbers
// ---------------------------------------------------------------------------

/// A maximum clique, found by branch and bound over candidate bitsets.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    mc_expand(g, g.vertex_mask(), &mut current, &mut best);
    best
}

fn mc_expand(g: &Graph, candidates: u64, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() + candidates.count_ones() as usize <= best.len() {
        return;
    }
    if candidates == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    current.push(v);
    mc_expand(g, candidates & g.neighbors(v), current, best);
    current.pop();
    mc_expand(g, candidates & !(1u64 << v), current, best);
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum independent set (a maximum clique of the complement).
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

// ---------------------------------------------------------------------------
// Complement classification
// ---------------------------------------------------------------------------

/// Component taxonomy of the complement of a graph: isolated vertices, chord
/// less cycles (listed as vertex sequences), and `other` set when any
/// component is neither.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementStructure {
    pub isolated: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    pub other: bool,
}

/// Classifies the components of `complement(h)`.
pub fn complement_structure(h: &Graph) -> ComplementStructure {
    let comp = h.complement();
    let mut out = ComplementStructure {
        isolated: Vec::new(),
        cycles: Vec::new(),
        other: false,
    };
    for mask in comp.components() {
        let size = mask.count_ones() as usize;
        if size == 1 {
            out.isolated.push(mask.trailing_zeros() as usize);
            continue;
        }
        if size >= 3 && bits(mask).all(|v| (comp.neighbors(v) & mask).count_ones() == 2) {
            // Walk the cycle starting at its smallest vertex, towards its
            // smaller neighbour, for a deterministic listing.
            let start = mask.trailing_zeros() as usize;
            let mut seq = vec![start];
            let mut prev = start;
            let mut cur = (comp.neighbors(start) & mask).trailing_zeros() as usize;
            while cur != start {
                seq.push(cur);
                let next = bits(comp.neighbors(cur) & mask)
                    .find(|&w| w != prev)
                    .expect("cycle vertices have two neighbours");
                prev = cur;
                cur = next;
            }
            out.cycles.push(seq);
        } else {
            out.other = true;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Vertex connectivity (Menger via unit-capacity vertex-split max-flow)
// ---------------------------------------------------------------------------

/// Maximum number of internally vertex-disjoint paths between two
/// non-adjacent vertices: max-flow on the split network where every vertex
/// becomes an in/out arc of capacity one.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    debug_assert!(!g.has_edge(s, t) && s != t);
    let n = g.n();
    // Node 2v is "v in", node 2v+1 is "v out".
    let size = 2 * n;
    let mut cap = vec![vec![0u8; size]; size];
    for v in g.vertices() {
        cap[2 * v][2 * v + 1] = 1;
    }
    for (u, v) in g.edges() {
        cap[2 * u + 1][2 * v] = 1;
        cap[2 * v + 1][2 * u] = 1;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    loop {
        // BFS for an augmenting path in the residual network.
        let mut parent = vec![usize::MAX; size];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..size {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Vertex connectivity. Conventions: disconnected graphs (and the order-0
/// and order-1 graphs) have connectivity 0; the complete graph K_n has
/// connectivity n-1 since no non-adjacent pair exists.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut kappa = n - 1;
    for s in g.vertices() {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                kappa = kappa.min(local_connectivity(g, s, t));
            }
        }
    }
    kappa
}

/// All separating sets of minimum size (size kappa), in lexicographic order.
/// Exhaustive over vertex subsets, so the order is capped at
/// [`SEPARATOR_ENUMERATION_CAP`].
pub fn minimum_separators(g: &Graph) -> Result<Vec<Vec<usize>>, StructureError> {
    let n = g.n();
    if n > SEPARATOR_ENUMERATION_CAP {
        return Err(StructureError::TooLargeForSeparators {
            n,
            cap: SEPARATOR_ENUMERATION_CAP,
        });
    }
    if !g.is_connected() || n < 2 {
        return Err(StructureError::Disconnected);
    }
    if g.is_complete() {
        return Err(StructureError::CompleteGraph);
    }
    let kappa = vertex_connectivity(g);
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(kappa);
    collect_separators(g, kappa, 0, &mut subset, &mut out);
    Ok(out)
}

fn collect_separators(
    g: &Graph,
    size: usize,
    from: usize,
    subset: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if subset.len() == size {
        if !g.removing(subset).is_connected() {
            out.push(subset.clone());
        }
        return;
    }
    for v in from..g.n() {
        subset.push(v);
        collect_separators(g, size, v + 1, subset, out);
        subset.pop();
    }
}

/// Tries to split a vertex set into an independent part and a clique part
/// (either may be empty). Returns the first such partition in subset order.
pub fn independent_clique_partition(g: &Graph, set: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let k = set.len();
    'outer: for choice in 0u64..(1 << k) {
        let mut indep = Vec::new();
        let mut clique = Vec::new();
        for (i, &v) in set.iter().enumerate() {
            if choice >> i & 1 == 0 {
                indep.push(v);
            } else {
                clique.push(v);
            }
        }
        for i in 0..indep.len() {
            for j in i + 1..indep.len() {
                if g.has_edge(indep[i], indep[j]) {
                    continue 'outer;
                }
            }
        }
        for i in 0..clique.len() {
            for j in i + 1..clique.len() {
                if !g.has_edge(clique[i], clique[j]) {
                    continue 'outer;
                }
            }
        }
        return Some((indep, clique));
    }
    None
}

// ---------------------------------------------------------------------------
// Property suite
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PropStatus {
    Pass,
    Fail,
    Vacuous,
}

/// Concrete re-checkable counterexample data attached to a failing entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub note: String,
}

impl Witness {
    fn vertex(v: usize, note: impl Into<String>) -> Self {
        Witness {
            vertices: vec![v],
            edges: Vec::new(),
            note: note.into(),
        }
    }
    fn edge(x: usize, y: usize, note: impl Into<String>) -> Self {
        Witness {
            vertices: Vec::new(),
            edges: vec![(x, y)],
            note: note.into(),
        }
    }
    fn set(vs: Vec<usize>, note: impl Into<String>) -> Self {
        Witness {
            vertices: vs,
            edges: Vec::new(),
            note: note.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropEntry {
    pub name: String,
    pub status: PropStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropEntry {
    fn pass(name: &str) -> Self {
        PropEntry {
            name: name.into(),
            status: PropStatus::Pass,
            witness: None,
            note: None,
        }
    }
    fn fail(name: &str, witness: Witness) -> Self {
        PropEntry {
            name: name.into(),
            status: PropStatus::Fail,
            witness: Some(witness),
            note: None,
        }
    }
    fn vacuous(name: &str) -> Self {
        PropEntry {
            name: name.into(),
            status: PropStatus::Vacuous,
            witness: None,
            note: None,
        }
    }
    fn vacuous_because(name: &str, note: impl Into<String>) -> Self {
        PropEntry {
            name: name.into(),
            status: PropStatus::Vacuous,
            witness: None,
            note: Some(note.into()),
        }
    }
}

/// Verdicts for the full battery of structural facts about non-complete
/// double-critical graphs. When the input is complete or not
/// double-critical every entry is vacuous; a `fail` entry on a genuinely
/// double-critical non-complete graph is a counterexample and batch runners
/// treat it as fatal.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub chi: usize,
    pub n: usize,
    pub m: usize,
    pub is_complete: bool,
    pub is_vertex_critical: bool,
    pub is_double_critical: bool,
    pub entries: Vec<PropEntry>,
}

impl PropertyReport {
    pub fn failures(&self) -> impl Iterator<Item = &PropEntry> {
        self.entries.iter().filter(|e| e.status == PropStatus::Fail)
    }

    /// True when the report contradicts the battery: a failure on a
    /// double-critical non-complete input.
    pub fn contradicts(&self) -> bool {
        self.is_double_critical && !self.is_complete && self.failures().next().is_some()
    }
}

const PROP_NAMES: &[&str] = &[
    "no_complete_k_minus_1_subgraph",
    "contractions_k_minus_1_colorable",
    "prescribed_color_paths",
    "common_neighborhood_size",
    "min_degree_neighborhood_graph",
    "exists_nonempty_a_side",
    "exists_edge_with_nonempty_d",
    "no_isolated_vertex_in_a_or_c",
    "no_degree_one_vertex_in_complement_gx",
    "min_degree_k_plus_1",
    "degree_minus_alpha_x_bound",
    "neighborhood_graph_chromatic_bound",
    "low_degree_complement_structure",
    "no_adjacent_low_degree_vertices",
    "separator_partition_obstruction",
    "six_connected",
    "deg9_alpha_x_three",
    "deg9_no_k4_minus_in_complement",
    "deg9_private_non_neighbours",
];

/// Evaluates the property battery. `chi`, criticality and completeness are
/// recorded first; the entries are evaluated literally only when the graph
/// is double-critical and not complete, and are vacuous otherwise.
pub fn verify_dc_properties(g: &Graph) -> PropertyReport {
    let chi = chromatic_number(g);
    let is_complete = g.is_complete();
    let dc = is_double_critical(g);
    let vertex_critical = dc || crate::critical::is_vertex_critical(g);
    let entries = if !dc || is_complete {
        PROP_NAMES.iter().map(|n| PropEntry::vacuous(n)).collect()
    } else {
        evaluate_all_props(g, chi)
    };
    PropertyReport {
        chi,
        n: g.n(),
        m: g.m(),
        is_complete,
        is_vertex_critical: vertex_critical,
        is_double_critical: dc,
        entries,
    }
}

/// Runs every checker regardless of criticality; used by the suite once the
/// gate has passed and directly by tests.
pub fn evaluate_all_props(g: &Graph, k: usize) -> Vec<PropEntry> {
    vec![
        check_no_complete_k_minus_1_subgraph(g, k),
        check_contractions_colorable(g, k),
        check_prescribed_color_paths(g, k),
        check_common_neighborhood_size(g, k),
        check_min_degree_neighborhood_graph(g, k),
        check_exists_nonempty_a_side(g, k),
        check_exists_edge_with_nonempty_d(g, k),
        check_no_isolated_vertex_in_a_or_c(g, k),
        check_no_degree_one_vertex_in_complement_gx(g, k),
        check_min_degree_k_plus_1(g, k),
        check_degree_minus_alpha_x_bound(g, k),
        check_neighborhood_graph_chromatic_bound(g, k),
        check_low_degree_complement_structure(g, k),
        check_no_adjacent_low_degree_vertices(g, k),
        check_separator_partition_obstruction(g, k),
        check_six_connected(g, k),
        check_deg9_alpha_x_three(g, k),
        check_deg9_no_k4_minus_in_complement(g, k),
        check_deg9_private_non_neighbours(g, k),
    ]
}

pub fn check_no_complete_k_minus_1_subgraph(g: &Graph, k: usize) -> PropEntry {
    let name = "no_complete_k_minus_1_subgraph";
    let clique = max_clique(g);
    if clique.len() + 1 >= k && k >= 1 {
        let found: Vec<usize> = clique.into_iter().take(k - 1).collect();
        if found.len() + 1 == k {
            return PropEntry::fail(name, Witness::set(found, "vertices of a K_{k-1} subgraph"));
        }
    }
    PropEntry::pass(name)
}

/// Literal check over every connected vertex set of size >= 2: contracting
/// it leaves a (k-1)-colourable graph. Exponential in n; intended for the
/// small graphs this crate targets.
pub fn check_contractions_colorable(g: &Graph, k: usize) -> PropEntry {
    let name = "contractions_k_minus_1_colorable";
    let mut failure: Option<Vec<usize>> = None;
    for_each_connected_subset(g, &mut |mask| {
        if mask.count_ones() < 2 {
            return true;
        }
        let set: Vec<usize> = bits(mask).collect();
        let contracted = g.contract_set(&set).expect("connected set contracts");
        if chromatic_number(&contracted) > k.saturating_sub(1) {
            failure = Some(set);
            false
        } else {
            true
        }
    });
    match failure {
        Some(set) => PropEntry::fail(
            name,
            Witness::set(
                set,
                "connected set whose contraction is not (k-1)-colourable",
            ),
        ),
        None => PropEntry::pass(name),
    }
}

/// Visits every connected vertex subset (as a bitset) exactly once. The
/// callback returns `false` to stop early.
pub fn for_each_connected_subset(g: &Graph, f: &mut impl FnMut(u64) -> bool) -> bool {
    fn rec(g: &Graph, set: u64, allowed: u64, f: &mut impl FnMut(u64) -> bool) -> bool {
        if !f(set) {
            return false;
        }
        let mut frontier = 0u64;
        for v in bits(set) {
            frontier |= g.neighbors(v);
        }
        frontier &= allowed & !set;
        let ext: Vec<usize> = bits(frontier).collect();
        let mut banned = 0u64;
        for (i, &u) in ext.iter().enumerate() {
            if i > 0 {
                banned |= 1 << ext[i - 1];
            }
            if !rec(g, set | 1 << u, allowed & !banned, f) {
                return false;
            }
        }
        true
    }
    for v in g.vertices() {
        // Subsets whose minimum vertex is v.
        let allowed = g.vertex_mask() & !((1u64 << v) - 1) & !(1 << v);
        if !rec(g, 1 << v, allowed, f) {
            return false;
        }
    }
    true
}

/// For every edge: the canonical (k-2)-colouring of G-x-y admits an
/// (x,y)-path for every sequence of distinct colours, and the edge lies in
/// at least (k-2)!/(k-2-i)! cycles of length i+2 for every i.
pub fn check_prescribed_color_paths(g: &Graph, k: usize) -> PropEntry {
    let name = "prescribed_color_paths";
    if k < 3 {
        return PropEntry::vacuous_because(name, "needs k >= 3");
    }
    let kk = k - 2;
    for (x, y) in g.edges() {
        let deleted = g.removing(&[x, y]);
        let coloring = match is_k_colorable(&deleted, kk) {
            Some(c) => c,
            None => {
                return PropEntry::fail(
                    name,
                    Witness::edge(x, y, "G - x - y admits no (k-2)-colouring"),
                )
            }
        };
        let mut sequences_ok = true;
        let mut bad_seq = Vec::new();
        for_each_sequence(kk, &mut |seq| {
            if prescribed_color_path(g, &coloring, x, y, seq)
                .expect("validated inputs")
                .is_none()
            {
                sequences_ok = false;
                bad_seq = seq.to_vec();
                false
            } else {
                true
            }
        });
        if !sequences_ok {
            return PropEntry::fail(
                name,
                Witness::edge(x, y, format!("no path for colour sequence {bad_seq:?}")),
            );
        }
        for i in 1..=kk {
            let lower = falling_factorial(kk, i);
            let count = count_cycles_through_edge(g, x, y, i + 2).expect("edge validated");
            if count < lower {
                return PropEntry::fail(
                    name,
                    Witness::edge(
                        x,
                        y,
                        format!("only {count} cycles of length {}, need >= {lower}", i + 2),
                    ),
                );
            }
        }
    }
    PropEntry::pass(name)
}

/// (k-2)!/(k-2-i)! as used by the cycle-count bound.
pub fn falling_factorial(n: usize, i: usize) -> u64 {
    (n - i + 1..=n).map(|v| v as u64).product()
}

/// Calls `f` with every non-empty ordered sequence of distinct colours from
/// `0..k`. `f` returns `false` to stop.
fn for_each_sequence(k: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    fn rec(
        k: usize,
        seq: &mut Vec<usize>,
        used: u64,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        for c in 0..k {
            if used & (1 << c) != 0 {
                continue;
            }
            seq.push(c);
            let keep = f(seq) && rec(k, seq, used | 1 << c, f);
            seq.pop();
            if !keep {
                return false;
            }
        }
        true
    }
    rec(k, &mut Vec::new(), 0, f);
}

pub fn check_common_neighborhood_size(g: &Graph, k: usize) -> PropEntry {
    let name = "common_neighborhood_size";
    for (x, y) in g.edges() {
        let b = g.neighbors(x) & g.neighbors(y);
        if (b.count_ones() as usize) + 2 < k {
            return PropEntry::fail(name, Witness::edge(x, y, "|B(xy)| < k - 2"));
        }
    }
    PropEntry::pass(name)
}

pub fn check_min_degree_neighborhood_graph(g: &Graph, k: usize) -> PropEntry {
    let name = "min_degree_neighborhood_graph";
    for x in g.vertices() {
        let gx = g.neighborhood_graph(x).expect("vertex in range");
        if gx.n() > 0 && gx.min_degree() + 2 < k {
            return PropEntry::fail(name, Witness::vertex(x, "delta(G_x) < k - 2"));
        }
        if gx.n() == 0 && k > 2 {
            return PropEntry::fail(name, Witness::vertex(x, "isolated vertex"));
        }
    }
    PropEntry::pass(name)
}

pub fn check_exists_nonempty_a_side(g: &Graph, _k: usize) -> PropEntry {
    let name = "exists_nonempty_a_side";
    for x in g.vertices() {
        let found = bits(g.neighbors(x))
            .any(|y| edge_partition(g, x, y).map(|p| p.a != 0).unwrap_or(false));
        if !found {
            return PropEntry::fail(
                name,
                Witness::vertex(x, "A(xy) is empty for every neighbour y"),
            );
        }
    }
    PropEntry::pass(name)
}

pub fn check_exists_edge_with_nonempty_d(g: &Graph, _k: usize) -> PropEntry {
    let name = "exists_edge_with_nonempty_d";
    let found = g
        .edges()
        .into_iter()
        .any(|(x, y)| edge_partition(g, x, y).map(|p| p.d != 0).unwrap_or(false));
    if found {
        PropEntry::pass(name)
    } else {
        PropEntry::fail(
            name,
            Witness {
                vertices: vec![],
                edges: vec![],
                note: "every edge has empty D".into(),
            },
        )
    }
}

pub fn check_no_isolated_vertex_in_a_or_c(g: &Graph, _k: usize) -> PropEntry {
    let name = "no_isolated_vertex_in_a_or_c";
    for (x, y) in g.edges() {
        let p = edge_partition(g, x, y).expect("edge");
        for (side, mask) in [("A", p.a), ("C", p.c)] {
            for v in bits(mask) {
                if g.neighbors(v) & mask == 0 {
                    return PropEntry::fail(
                        name,
                        Witness {
                            vertices: vec![v],
                            edges: vec![(x, y)],
                            note: format!("isolated vertex in {side}(xy)"),
                        },
                    );
                }
            }
        }
    }
    PropEntry::pass(name)
}

pub fn check_no_degree_one_vertex_in_complement_gx(g: &Graph, _k: usize) -> PropEntry {
    let name = "no_degree_one_vertex_in_complement_gx";
    for x in g.vertices() {
        let gx = g.neighborhood_graph(x).expect("vertex in range");
        let comp = gx.complement();
        let originals: Vec<usize> = bits(g.neighbors(x)).collect();
        for v in comp.vertices() {
            if comp.degree(v) == 1 {
                return PropEntry::fail(
                    name,
                    Witness::set(
                        vec![x, originals[v]],
                        "neighbour with exactly one non-neighbour inside G_x",
                    ),
                );
            }
        }
    }
    PropEntry::pass(name)
}

pub fn check_min_degree_k_plus_1(g: &Graph, k: usize) -> PropEntry {
    let name = "min_degree_k_plus_1";
    match g.vertices().find(|&v| g.degree(v) < k + 1) {
        Some(v) => PropEntry::fail(name, Witness::vertex(v, "degree below k + 1")),
        None => PropEntry::pass(name),
    }
}

pub fn check_degree_minus_alpha_x_bound(g: &Graph, k: usize) -> PropEntry {
    let name = "degree_minus_alpha_x_bound";
    for x in g.vertices() {
        let gx = g.neighborhood_graph(x).expect("vertex in range");
        let alpha_x = independence_number(&gx);
        if alpha_x < 2 {
            return PropEntry::fail(name, Witness::vertex(x, "alpha_x < 2"));
        }
        if g.degree(x) < alpha_x + k - 1 {
            return PropEntry::fail(name, Witness::vertex(x, "deg(x) - alpha_x < k - 1"));
        }
    }
    PropEntry::pass(name)
}

pub fn check_neighborhood_graph_chromatic_bound(g: &Graph, k: usize) -> PropEntry {
    let name = "neighborhood_graph_chromatic_bound";
    for x in g.vertices() {
        if g.degree(x) == g.n() - 1 {
            continue; // joined to all other vertices
        }
        let gx = g.neighborhood_graph(x).expect("vertex in range");
        if chromatic_number(&gx) + 3 > k {
            return PropEntry::fail(name, Witness::vertex(x, "chi(G_x) > k - 3"));
        }
    }
    PropEntry::pass(name)
}

pub fn check_low_degree_complement_structure(g: &Graph, k: usize) -> PropEntry {
    let name = "low_degree_complement_structure";
    for x in g.vertices() {
        if g.degree(x) != k + 1 {
            continue;
        }
        let gx = g.neighborhood_graph(x).expect("vertex in range");
        let cs = complement_structure(&gx);
        if cs.other || cs.cycles.is_empty() || cs.cycles.iter().any(|c| c.len() < 5) {
            return PropEntry::fail(
                name,
                Witness::vertex(
                    x,
                    "complement of G_x is not isolated-vertices plus cycles of length >= 5",
                ),
            );
        }
    }
    PropEntry::pass(name)
}

pub fn check_no_adjacent_low_degree_vertices(g: &Graph, k: usize) -> PropEntry {
    let name = "no_adjacent_low_degree_vertices";
    for (x, y) in g.edges() {
        if g.degree(x) == k + 1 && g.degree(y) == k + 1 {
            return PropEntry::fail(
                name,
                Witness::edge(x, y, "adjacent vertices of degree k + 1"),
            );
        }
    }
    PropEntry::pass(name)
}

pub fn check_separator_partition_obstruction(g: &Graph, _k: usize) -> PropEntry {
    let name = "separator_partition_obstruction";
    match minimum_separators(g) {
        Ok(seps) => {
            for s in seps {
                if let Some((indep, clique)) = independent_clique_partition(g, &s) {
                    return PropEntry::fail(
                        name,
                        Witness::set(
                            s.clone(),
                            format!(
                                "minimum separator splits into independent {indep:?} plus clique {clique:?}"
                            ),
                        ),
                    );
                }
            }
            PropEntry::pass(name)
        }
        Err(StructureError::TooLargeForSeparators { n, cap }) => PropEntry::vacuous_because(
            name,
            format!("separator enumeration capped at n <= {cap}, graph has {n} vertices"),
        ),
        Err(_) => PropEntry::vacuous_because(name, "graph is complete or disconnected"),
    }
}

pub fn check_six_connected(g: &Graph, k: usize) -> PropEntry {
    let name = "six_connected";
    if k < 6 {
        return PropEntry::vacuous_because(name, "applies to k >= 6");
    }
    let kappa = vertex_connectivity(g);
    if kappa >= 6 {
        PropEntry::pass(name)
    } else {
        PropEntry::fail(
            name,
            Witness {
                vertices: vec![],
                edges: vec![],
                note: format!("kappa = {kappa} < 6"),
            },
        )
    }
}

fn degree_nine_vertices(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k != 7 {
        return None;
    }
    Some(g.vertices().filter(|&v| g.degree(v) == 9).collect())
}

pub fn check_deg9_alpha_x_three(g: &Graph, k: usize) -> PropEntry {
    let name = "deg9_alpha_x_three";
    let Some(nine) = degree_nine_vertices(g, k) else {
        return PropEntry::vacuous_because(name, "applies to k = 7");
    };
    for x in nine {
        let gx = g.neighborhood_graph(x).expect("vertex in range");
        if independence_number(&gx) != 3 {
            return PropEntry::fail(
                name,
                Witness::vertex(x, "alpha_x != 3 at a degree-9 vertex"),
            );
        }
    }
    PropEntry::pass(name)
}

pub fn check_deg9_no_k4_minus_in_complement(g: &Graph, k: usize) -> PropEntry {
    let name = "deg9_no_k4_minus_in_complement";
    let Some(nine) = degree_nine_vertices(g, k) else {
        return PropEntry::vacuous_because(name, "applies to k = 7");
    };
    for x in nine {
        let gx = g.neighborhood_graph(x).expect("vertex in range");
        let comp = gx.complement();
        let originals: Vec<usize> = bits(g.neighbors(x)).collect();
        // K4 minus an edge as a subgraph: four vertices spanning >= 5 edges.
        let vs: Vec<usize> = comp.vertices().collect();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                for c in b + 1..vs.len() {
                    for d in c + 1..vs.len() {
                        let quad = [vs[a], vs[b], vs[c], vs[d]];
                        let mut edges = 0;
                        for i in 0..4 {
                            for j in i + 1..4 {
                                if comp.has_edge(quad[i], quad[j]) {
                                    edges += 1;
                                }
                            }
                        }
                        if edges >= 5 {
                            let named: Vec<usize> = quad.iter().map(|&v| originals[v]).collect();
                            return PropEntry::fail(
                                name,
                                Witness {
                                    vertices: named,
                                    edges: vec![],
                                    note: format!("K4-minus-an-edge in the complement of G_{x}"),
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    PropEntry::pass(name)
}

/// The degree-9 structure facts: maximum independent sets of G_x have size 3
/// with all members of degree 5 in G_x, degrees in G_x lie in {5, 6, 8},
/// each w_i has exactly one private non-neighbour y_i outside W, the y_i are
/// distinct, and each y_i sees both a neighbour and a non-neighbour in the
/// remaining part Z.
pub fn check_deg9_private_non_neighbours(g: &Graph, k: usize) -> PropEntry {
    let name = "deg9_private_non_neighbours";
    let Some(nine) = degree_nine_vertices(g, k) else {
        return PropEntry::vacuous_because(name, "applies to k = 7");
    };
    for x in nine {
        let gx = g.neighborhood_graph(x).expect("vertex in range");
        let originals: Vec<usize> = bits(g.neighbors(x)).collect();
        for v in gx.vertices() {
            if ![5, 6, 8].contains(&gx.degree(v)) {
                return PropEntry::fail(
                    name,
                    Witness::set(vec![x, originals[v]], "degree in G_x outside {5, 6, 8}"),
                );
            }
        }
        let alpha = independence_number(&gx);
        // Every maximum independent set is checked, not just one.
        let sets = independent_sets_of_size(&gx, alpha);
        for w in sets {
            let fail = |note: String| {
                PropEntry::fail(
                    name,
                    Witness {
                        vertices: std::iter::once(x)
                            .chain(w.iter().map(|&v| originals[v]))
                            .collect(),
                        edges: vec![],
                        note,
                    },
                )
            };
            if w.iter().any(|&v| gx.degree(v) != 5) {
                return fail("vertex of a maximum independent set with degree != 5".into());
            }
            let w_mask: u64 = w.iter().map(|&v| 1u64 << v).sum();
            let mut ys = Vec::new();
            for &wi in &w {
                let non: Vec<usize> = gx
                    .vertices()
                    .filter(|&u| u != wi && w_mask & (1 << u) == 0 && !gx.has_edge(wi, u))
                    .collect();
                if non.len() != 1 {
                    return fail(format!(
                        "w has {} non-neighbours outside W, expected exactly 1",
                        non.len()
                    ));
                }
                ys.push(non[0]);
            }
            let mut dedup = ys.clone();
            dedup.sort_unstable();
            dedup.dedup();
            if dedup.len() != ys.len() {
                return fail("private non-neighbours are not distinct".into());
            }
            let y_mask: u64 = ys.iter().map(|&v| 1u64 << v).sum();
            let z_mask = gx.vertex_mask() & !w_mask & !y_mask;
            for &yi in &ys {
                let nbrs = gx.neighbors(yi) & z_mask;
                if nbrs == 0 || nbrs == z_mask {
                    return fail("y_i lacks a neighbour or a non-neighbour in Z".into());
                }
            }
        }
    }
    PropEntry::pass(name)
}

/// All independent sets of exactly the given size, as sorted vertex lists.
fn independent_sets_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(g: &Graph, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in from..g.n() {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                rec(g, size, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(g, size, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, parse_spec};

    fn spec(s: &str) -> Graph {
        build(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn edge_partition_examples() {
        let k6 = Graph::complete(6).unwrap();
        let p = edge_partition(&k6, 0, 1).unwrap();
        assert_eq!((p.a, p.c, p.d), (0, 0, 0));
        assert_eq!(p.b.count_ones(), 4);

        let g = spec("join(C5,K2)");
        let p = edge_partition(&g, 5, 6).unwrap();
        assert_eq!(p.b_vertices(), vec![0, 1, 2, 3, 4]);
        assert_eq!((p.a, p.c, p.d), (0, 0, 0));

        let c5 = Graph::cycle(5).unwrap();
        let p = edge_partition(&c5, 0, 1).unwrap();
        assert_eq!(p.a_vertices(), vec![4]);
        assert_eq!(p.b, 0);
        assert_eq!(p.c_vertices(), vec![2]);
        assert_eq!(p.d_vertices(), vec![3]);

        assert!(edge_partition(&c5, 0, 2).is_err());
    }

    #[test]
    fn partition_law_and_degree_identity() {
        for s in ["W5", "join(C5,K2)", "H(6,5)", "C7"] {
            let g = spec(s);
            for (x, y) in g.edges() {
                let p = edge_partition(&g, x, y).unwrap();
                let total =
                    p.a.count_ones() + p.b.count_ones() + p.c.count_ones() + p.d.count_ones() + 2;
                assert_eq!(total as usize, g.n(), "partition law on {s}");
                assert_eq!(
                    g.degree(x),
                    (p.a.count_ones() + p.b.count_ones()) as usize + 1,
                    "degree identity on {s}"
                );
            }
        }
        let pet = Graph::petersen();
        for (x, y) in pet.edges() {
            let p = edge_partition(&pet, x, y).unwrap();
            let total =
                p.a.count_ones() + p.b.count_ones() + p.c.count_ones() + p.d.count_ones() + 2;
            assert_eq!(total as usize, pet.n());
        }
    }

    #[test]
    fn clique_and_independence_numbers() {
        let pet = Graph::petersen();
        assert_eq!(independence_number(&pet), 4);
        assert_eq!(clique_number(&pet), 2);

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(independence_number(&c5), 2);
        assert_eq!(clique_number(&c5), 2);

        let k6 = Graph::complete(6).unwrap();
        assert_eq!(independence_number(&k6), 1);
        assert_eq!(clique_number(&k6), 6);
    }

    #[test]
    fn complement_structure_taxonomy() {
        // complement(complement(C7)) = C7: one 7-cycle.
        let cs = complement_structure(&Graph::cycle(7).unwrap().complement());
        assert!(!cs.other);
        assert!(cs.isolated.is_empty());
        assert_eq!(cs.cycles.len(), 1);
        assert_eq!(cs.cycles[0].len(), 7);

        let cs = complement_structure(&Graph::complete(6).unwrap());
        assert!(!cs.other);
        assert_eq!(cs.isolated.len(), 6);
        assert!(cs.cycles.is_empty());

        // K4 minus an edge: complement is one edge plus two isolated vertices.
        let k4_minus = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let cs = complement_structure(&k4_minus);
        assert!(cs.other); // the P2 component is neither isolated nor a cycle
        assert_eq!(cs.isolated.len(), 2);
    }

    #[test]
    fn tame_complement_structure_means_degrees_zero_or_two() {
        for s in [
            "K6",
            "C7",
            "complement(C7)",
            "W5",
            "H(6,5)",
            "join(C5,K2)",
            "P5",
        ] {
            let h = spec(s);
            let cs = complement_structure(&h);
            if !cs.other {
                let comp = h.complement();
                assert!(
                    comp.vertices()
                        .all(|v| comp.degree(v) == 0 || comp.degree(v) == 2),
                    "{s}"
                );
            }
        }
    }

    #[test]
    fn connectivity_of_known_graphs() {
        assert_eq!(vertex_connectivity(&Graph::complete(6).unwrap()), 5);
        assert_eq!(vertex_connectivity(&Graph::complete(1).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Graph::petersen()), 3);
        assert_eq!(vertex_connectivity(&Graph::cycle(8).unwrap()), 2);
        assert_eq!(vertex_connectivity(&Graph::path(5).unwrap()), 1);
        assert_eq!(vertex_connectivity(&spec("join(C5,K2)")), 4);
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(vertex_connectivity(&two_triangles), 0);
    }

    #[test]
    fn kappa_never_exceeds_min_degree() {
        for s in ["W5", "C7", "H(6,5)", "join(C5,K2)", "P5"] {
            let g = spec(s);
            assert!(vertex_connectivity(&g) <= g.min_degree(), "{s}");
        }
    }

    #[test]
    fn minimum_separators_of_small_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        let seps = minimum_separators(&c5).unwrap();
        assert_eq!(seps.len(), 5);
        for s in &seps {
            assert_eq!(s.len(), 2);
            assert!(!c5.has_edge(s[0], s[1]));
        }

        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let seps = minimum_separators(&k33).unwrap();
        assert_eq!(seps, vec![vec![0, 1, 2], vec![3, 4, 5]]);

        assert!(minimum_separators(&Graph::complete(4).unwrap()).is_err());
    }

    #[test]
    fn petersen_minimum_separators_are_neighborhoods() {
        let pet = Graph::petersen();
        let seps = minimum_separators(&pet).unwrap();
        let neighborhoods: Vec<Vec<usize>> = pet
            .vertices()
            .map(|v| bits(pet.neighbors(v)).collect())
            .collect();
        for s in &seps {
            assert!(
                neighborhoods.contains(s),
                "separator {s:?} is not a neighbourhood"
            );
        }
        assert_eq!(seps.len(), 10);
    }

    #[test]
    fn partition_obstruction_finder() {
        let c5 = Graph::cycle(5).unwrap();
        // Any 2-element separator of C5 is independent: the partition exists.
        for s in minimum_separators(&c5).unwrap() {
            assert!(independent_clique_partition(&c5, &s).is_some());
        }
        // A 4-cycle inside a graph: {0,1,2,3} with edges 01,12,23,30 cannot
        // split into independent + clique once we look at all four.
        let c4 = Graph::cycle(4).unwrap();
        assert!(independent_clique_partition(&c4, &[0, 1, 2, 3]).is_none());
        assert!(independent_clique_partition(&c4, &[0, 2]).is_some());
    }

    #[test]
    fn property_report_is_vacuous_for_complete_and_noncritical() {
        let report = verify_dc_properties(&Graph::complete(7).unwrap());
        assert!(report.is_double_critical);
        assert!(report.is_complete);
        assert!(report
            .entries
            .iter()
            .all(|e| e.status == PropStatus::Vacuous));
        assert!(!report.contradicts());

        let report = verify_dc_properties(&spec("join(C5,K2)"));
        assert!(!report.is_double_critical);
        assert!(report.is_vertex_critical);
        assert!(report
            .entries
            .iter()
            .all(|e| e.status == PropStatus::Vacuous));
        assert_eq!(report.entries.len(), PROP_NAMES.len());
    }

    #[test]
    fn individual_checkers_find_witnesses_on_non_dc_graphs() {
        // The battery applied to C5 with k = 3 trips the degree bound.
        let c5 = Graph::cycle(5).unwrap();
        let e = check_min_degree_k_plus_1(&c5, 3);
        assert_eq!(e.status, PropStatus::Fail);

        // K6 satisfies most edge-local facts with k = 6.
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(
            check_common_neighborhood_size(&k6, 6).status,
            PropStatus::Pass
        );
        assert_eq!(
            check_min_degree_neighborhood_graph(&k6, 6).status,
            PropStatus::Pass
        );
        // ... but has a K5 subgraph.
        let e = check_no_complete_k_minus_1_subgraph(&k6, 6);
        assert_eq!(e.status, PropStatus::Fail);
        assert_eq!(e.witness.unwrap().vertices.len(), 5);

        // C5 join K2 contains no K4 = K_{5-1}? It does: two rim neighbours
        // plus the K2 pair. The checker should find it.
        let g = spec("join(C5,K2)");
        assert_eq!(
            check_no_complete_k_minus_1_subgraph(&g, 5).status,
            PropStatus::Fail
        );

        // A(xy) is empty for every edge of a complete graph.
        assert_eq!(
            check_exists_nonempty_a_side(&k6, 6).status,
            PropStatus::Fail
        );
        // C5 has nonempty A sides and a nonempty D.
        assert_eq!(
            check_exists_nonempty_a_side(&c5, 3).status,
            PropStatus::Pass
        );
        assert_eq!(
            check_exists_edge_with_nonempty_d(&c5, 3).status,
            PropStatus::Pass
        );
        assert_eq!(
            check_exists_edge_with_nonempty_d(&k6, 6).status,
            PropStatus::Fail
        );
    }

    #[test]
    fn contraction_checker_accepts_k6_and_rejects_sparse_graphs() {
        // Contracting any connected set of K6 leaves a smaller complete
        // graph, always 5-colourable.
        assert_eq!(
            check_contractions_colorable(&Graph::complete(6).unwrap(), 6).status,
            PropStatus::Pass
        );
        // C5 with k = 3: contracting a 3-vertex path leaves a triangle,
        // which is not 2-colourable, so the literal check fails (C5 is not
        // double-critical, so nothing is contradicted).
        let e = check_contractions_colorable(&Graph::cycle(5).unwrap(), 3);
        assert_eq!(e.status, PropStatus::Fail);
        assert_eq!(e.witness.unwrap().vertices.len(), 3);
    }

    #[test]
    fn connected_subset_enumeration_counts() {
        // P3 has connected subsets {0},{1},{2},{01},{12},{012}.
        let p3 = Graph::path(3).unwrap();
        let mut count = 0;
        for_each_connected_subset(&p3, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 6);

        // K3: every non-empty subset is connected.
        let k3 = Graph::complete(3).unwrap();
        let mut count = 0;
        for_each_connected_subset(&k3, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 7);
    }

    #[test]
    fn prescribed_paths_checker_on_k6_style_edges() {
        // K6 minus nothing: every edge satisfies the path battery at k = 6.
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(
            check_prescribed_color_paths(&k6, 6).status,
            PropStatus::Pass
        );
        // C5 at k = 3 demands a colour-0 path vertex adjacent to both ends
        // of every edge; C5 has no triangles, so this fails.
        let e = check_prescribed_color_paths(&Graph::cycle(5).unwrap(), 3);
        assert_eq!(e.status, PropStatus::Fail);
    }

    #[test]
    fn six_connected_checker() {
        assert_eq!(
            check_six_connected(&spec("H(6,5)"), 6).status,
            PropStatus::Pass
        );
        assert_eq!(
            check_six_connected(&Graph::petersen(), 6).status,
            PropStatus::Fail
        );
        assert_eq!(
            check_six_connected(&Graph::cycle(5).unwrap(), 3).status,
            PropStatus::Vacuous
        );
    }

    #[test]
    fn low_degree_complement_structure_checker() {
        // W5 with k = 4: the hub has degree 5 = k + 1 and its neighbourhood
        // graph is C5, whose complement is one 5-cycle. Rim vertices have
        // degree 3 and are skipped.
        assert_eq!(check_low_degree_complement_structure(&spec("W5"), 4).status, PropStatus::Pass);
        // complement(C7) with k = 3: every vertex has degree 4 = k + 1, and
        // the complement of any neighbourhood graph is a path, not cycles.
        let e = check_low_degree_complement_structure(&spec("complement(C7)"), 3);
        assert_eq!(e.status, PropStatus::Fail);
    }

    #[test]
    fn adjacent_low_degree_checker() {
        // Every C5 edge joins two degree-2 vertices; with k = 1 that is two
        // vertices of degree k + 1.
        let e = check_no_adjacent_low_degree_vertices(&Graph::cycle(5).unwrap(), 1);
        assert_eq!(e.status, PropStatus::Fail);
        assert_eq!(e.witness.unwrap().edges.len(), 1);
        // W5 with k = 4: only the hub has degree 5, so no such edge exists.
        assert_eq!(check_no_adjacent_low_degree_vertices(&spec("W5"), 4).status, PropStatus::Pass);
    }

    #[test]
    fn separator_obstruction_checker_on_wheel() {
        // kappa(W5) = 3 and a minimum separator {hub, r_i, r_j} splits into
        // the independent rim pair plus the hub clique, so the obstruction
        // check fails (consistent with W5 not being double-critical).
        let e = check_separator_partition_obstruction(&spec("W5"), 4);
        assert_eq!(e.status, PropStatus::Fail);
        // Beyond the enumeration cap the entry reports vacuous with a note.
        let big = Graph::cycle(16).unwrap();
        let e = check_separator_partition_obstruction(&big, 3);
        assert_eq!(e.status, PropStatus::Vacuous);
        assert!(e.note.unwrap().contains("capped"));
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(4, 1), 4);
        assert_eq!(falling_factorial(4, 2), 12);
        assert_eq!(falling_factorial(4, 4), 24);
        assert_eq!(falling_factorial(5, 5), 120);
    }

    #[test]
    fn report_serializes_with_stable_names() {
        let report = verify_dc_properties(&Graph::complete(3).unwrap());
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["entries"][0]["name"], "no_complete_k_minus_1_subgraph");
        assert_eq!(json["entries"][0]["status"], "vacuous");
        assert_eq!(json["is_double_critical"], true);
    }
}
