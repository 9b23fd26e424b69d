//! Criticality predicates, join decomposition, and the double-critical-edge
//! census.
//!
//! A graph is vertex-critical when deleting any vertex lowers the chromatic
//! number, and double-critical when additionally deleting both ends of any
//! edge lowers it by two. The census scans a corpus, keeps the
//! vertex-critical graphs of a target chromatic number, and reports the
//! double-critical edge ratio of each together with the exact rational bound
//! `(2 + 1/(3n-5)) * m/3`.

use crate::color::chromatic_number;
use crate::graph::{write_graph6, Graph};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalError {
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Exact fraction with an i64 numerator and positive denominator, always in
/// lowest terms. Comparisons cross-multiply in i128, so census-scale values
/// never overflow or round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        num /= g;
        den /= g;
        Rational { num, den }
    }

    pub fn from_int(v: i64) -> Self {
        Rational { num: v, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The conjectured cap on double-critical edges of a 5-critical graph:
/// `(2 + 1/(3n-5)) * m/3`, computed exactly.
pub fn bound_c(n: usize, m: usize) -> Rational {
    Rational::new(m as i64 * (6 * n as i64 - 9), 3 * (3 * n as i64 - 5))
}

/// True when deleting any single vertex lowers the chromatic number.
pub fn is_vertex_critical(g: &Graph) -> bool {
    debug_assert!(g.n() >= 1);
    let chi = chromatic_number(g);
    g.vertices()
        .all(|v| chromatic_number(&g.removing(&[v])) < chi)
}

/// Edges `xy` with `chi(G - x - y) = chi(G) - 2`, in lexicographic order.
pub fn double_critical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let chi = chromatic_number(g);
    g.edges()
        .into_iter()
        .filter(|&(x, y)| chromatic_number(&g.removing(&[x, y])) + 2 == chi)
        .collect()
}

/// Vertex-critical and every edge is double-critical.
pub fn is_double_critical(g: &Graph) -> bool {
    is_vertex_critical(g) && double_critical_edges(g).len() == g.m()
}

/// Vertex-critical and removing any two non-incident edges lowers the
/// chromatic number by two. Vacuously true when no such pair exists.
pub fn is_double_edge_critical(g: &Graph) -> bool {
    if !is_vertex_critical(g) {
        return false;
    }
    let chi = chromatic_number(g);
    let edges = g.edges();
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            if e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1 {
                continue;
            }
            if chromatic_number(&g.removing_edges(&[e1, e2])) + 2 != chi {
                return false;
            }
        }
    }
    true
}

/// Vertex-critical and removing any vertex plus any edge disjoint from it
/// lowers the chromatic number by two.
pub fn is_mixed_double_critical(g: &Graph) -> bool {
    if !is_vertex_critical(g) {
        return false;
    }
    let chi = chromatic_number(g);
    for x in g.vertices() {
        let h = g.removing(&[x]);
        for e in h.edges() {
            if chromatic_number(&h.removing_edges(&[e])) + 2 != chi {
                return false;
            }
        }
    }
    true
}

/// Per-graph verdict bundling the criticality predicates.
#[derive(Debug, Clone, Serialize)]
pub struct CriticalityVerdict {
    pub chi: usize,
    pub is_vertex_critical: bool,
    pub dc_edges: Vec<(usize, usize)>,
    pub is_double_critical: bool,
    pub is_double_edge_critical: bool,
    pub is_mixed_double_critical: bool,
}

pub fn criticality_verdict(g: &Graph) -> CriticalityVerdict {
    let dc_edges = double_critical_edges(g);
    let vertex_critical = is_vertex_critical(g);
    CriticalityVerdict {
        chi: chromatic_number(g),
        is_vertex_critical: vertex_critical,
        is_double_critical: vertex_critical && dc_edges.len() == g.m(),
        dc_edges,
        is_double_edge_critical: is_double_edge_critical(g),
        is_mixed_double_critical: is_mixed_double_critical(g),
    }
}

/// If the complement of `g` is disconnected, `g` is a join; returns the two
/// factors, the one containing vertex 0 first. Factors keep the relative
/// order of their vertices.
pub fn decompose_join(g: &Graph) -> Option<(Graph, Graph)> {
    let comps = g.complement().components();
    if comps.len() < 2 {
        return None;
    }
    let first = comps[0]; // components are ordered by smallest member, so 0 is here
    let rest = g.vertex_mask() & !first;
    Some((g.induced_mask(first), g.induced_mask(rest)))
}

/// A pair of edges, each as an ordered vertex pair.
pub type EdgePair = ((usize, usize), (usize, usize));

/// Looks for two disjoint double-critical edges in a vertex-critical
/// 4-chromatic graph. Scans double-critical edges in lexicographic pair
/// order and returns the first disjoint pair.
pub fn non_incident_dc_pair(g: &Graph) -> Result<Option<EdgePair>, CriticalError> {
    if chromatic_number(g) != 4 {
        return Err(CriticalError::Precondition(
            "chromatic number must be 4".into(),
        ));
    }
    if !is_vertex_critical(g) {
        return Err(CriticalError::Precondition(
            "graph must be vertex-critical".into(),
        ));
    }
    let dc = double_critical_edges(g);
    for (i, &e1) in dc.iter().enumerate() {
        for &e2 in &dc[i + 1..] {
            if e1.0 != e2.0 && e1.0 != e2.1 && e1.1 != e2.0 && e1.1 != e2.1 {
                return Ok(Some((e1, e2)));
            }
        }
    }
    Ok(None)
}

/// One census line: the double-critical edge count of a vertex-critical
/// graph against the exact conjectured bound.
#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub dc_edge_count: usize,
    pub ratio: Rational,
    pub bound_c: Rational,
    pub is_decomposable: bool,
    pub factors: Option<(String, String)>,
}

impl Serialize for CensusRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CensusRecord", 9)?;
        s.serialize_field("id", &self.id)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("chi", &self.chi)?;
        s.serialize_field("dc_edge_count", &self.dc_edge_count)?;
        s.serialize_field("ratio", &self.ratio)?;
        s.serialize_field("bound_c", &self.bound_c)?;
        s.serialize_field("is_decomposable", &self.is_decomposable)?;
        s.serialize_field("factors", &self.factors)?;
        s.end()
    }
}

/// Tail line of a census run; skipped graphs stay visible here.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CensusSummary {
    pub scanned: usize,
    pub emitted: usize,
    pub skipped_chi_mismatch: usize,
    pub skipped_not_critical: usize,
    pub parse_errors: usize,
}

/// Builds the census record for one graph, or `None` when the graph is
/// filtered out (wrong chromatic number or not vertex-critical).
pub fn census_record(id: &str, g: &Graph, target_chi: usize) -> Option<CensusRecord> {
    if chromatic_number(g) != target_chi || !is_vertex_critical(g) {
        return None;
    }
    let m = g.m();
    let dc = double_critical_edges(g).len();
    let factors = decompose_join(g).map(|(a, b)| {
        (
            write_graph6(&a).expect("factor of a valid graph encodes"),
            write_graph6(&b).expect("factor of a valid graph encodes"),
        )
    });
    Some(CensusRecord {
        id: id.to_string(),
        n: g.n(),
        m,
        chi: target_chi,
        dc_edge_count: dc,
        ratio: if m == 0 {
            Rational::from_int(0)
        } else {
            Rational::new(dc as i64, m as i64)
        },
        bound_c: bound_c(g.n(), m),
        is_decomposable: factors.is_some(),
        factors,
    })
}

/// Sequential census over labelled graphs; records come out in input order.
pub fn census<'a, I>(graphs: I, target_chi: usize) -> (Vec<CensusRecord>, CensusSummary)
where
    I: IntoIterator<Item = (&'a str, &'a Graph)>,
{
    let mut records = Vec::new();
    let mut summary = CensusSummary::default();
    for (id, g) in graphs {
        summary.scanned += 1;
        if chromatic_number(g) != target_chi {
            summary.skipped_chi_mismatch += 1;
            continue;
        }
        match census_record(id, g, target_chi) {
            Some(rec) => {
                summary.emitted += 1;
                records.push(rec);
            }
            None => summary.skipped_not_critical += 1,
        }
    }
    (records, summary)
}
