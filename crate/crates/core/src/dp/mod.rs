//! Degree polynomials of vertices and graphs, degree polynomial sequences,
//! and the closed forms for graph families and graph operations.

mod formula;
mod verify;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Family, GraphError, SimpleGraph};
use crate::poly::{sort_non_increasing, PolyError};
use crate::DegreePoly;

pub use formula::{formula_cartesian, formula_complement, formula_join, formula_lexicographic, formula_tensor};
pub use verify::{apply_operation, verify_operation, OpKind, OperationCheck, VertexCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DpError {
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("isolated vertices present: {}", .0.join(", "))]
    IsolatedVertexPresent(Vec<String>),
    #[error("sequence entry {0} is the zero polynomial")]
    ZeroEntry(usize),
    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),
    #[error("operation {0} needs a second graph")]
    MissingOperand(OpKind),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `dp(v)`: coefficient at `x^i` counts neighbors of `v` of degree `i`.
pub fn degree_polynomial(g: &SimpleGraph, v: usize) -> Result<DegreePoly, DpError> {
    if v >= g.order() {
        return Err(DpError::BadVertex(v));
    }
    Ok(DegreePoly::from_terms(g.neighbors(v).iter().map(|&w| (g.degree(w) as u64, 1))))
}

/// `dp(G)`: coefficient at `x^i` counts vertices of degree `i`, so the
/// constant term counts isolated vertices.
pub fn graph_degree_polynomial(g: &SimpleGraph) -> DegreePoly {
    DegreePoly::from_terms(g.degrees().into_iter().map(|d| (d as u64, 1)))
}

/// Multiset of nonzero polynomials in non-increasing chain order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PolySequence {
    entries: Vec<DegreePoly>,
}

impl PolySequence {
    /// Orders `polys` with [`sort_non_increasing`]. Equal multisets give
    /// identical sequences.
    pub fn new(polys: Vec<DegreePoly>) -> Result<Self, DpError> {
        if let Some(i) = polys.iter().position(DegreePoly::is_zero) {
            return Err(DpError::ZeroEntry(i));
        }
        Ok(Self { entries: sort_non_increasing(polys)? })
    }

    /// Like [`PolySequence::new`], also reporting whether the given order
    /// differed from the chain order.
    pub fn from_presented(polys: Vec<DegreePoly>) -> Result<(Self, bool), DpError> {
        let given = polys.clone();
        let seq = Self::new(polys)?;
        let reordered = seq.entries != given;
        Ok((seq, reordered))
    }

    pub fn entries(&self) -> &[DegreePoly] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DegreePoly> {
        self.entries.iter()
    }

    /// Entries in [`DegreePoly::canonical_cmp`] descending order; a
    /// transitive sort key for the multiset.
    pub fn canonical_key(&self) -> Vec<DegreePoly> {
        let mut v = self.entries.clone();
        v.sort_by(|a, b| b.canonical_cmp(a));
        v
    }
}

impl fmt::Display for PolySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a PolySequence {
    type Item = &'a DegreePoly;
    type IntoIter = std::slice::Iter<'a, DegreePoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// The degree polynomial sequence of a graph without isolated vertices.
pub fn dp_sequence(g: &SimpleGraph) -> Result<PolySequence, DpError> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(DpError::IsolatedVertexPresent(
            isolated.into_iter().map(|v| g.label(v).to_string()).collect(),
        ));
    }
    let polys = (0..g.order()).map(|v| degree_polynomial(g, v)).collect::<Result<_, _>>()?;
    PolySequence::new(polys)
}

/// Closed-form degree polynomial sequence of a family member, computed
/// without building the graph.
pub fn family_dp_sequence(family: Family) -> Result<PolySequence, DpError> {
    family.validate()?;
    let mono = |c: u64, e: u64| DegreePoly::monomial(c, e);
    let repeat = |p: DegreePoly, k: usize| std::iter::repeat_n(p, k);
    let polys: Vec<DegreePoly> = match family {
        Family::Complete(1) => return Err(DpError::IsolatedVertexPresent(vec!["v0".into()])),
        Family::Complete(n) => repeat(mono(n as u64 - 1, n as u64 - 1), n).collect(),
        Family::Path(2) => vec![mono(1, 1); 2],
        Family::Path(3) => vec![mono(2, 1), mono(1, 2), mono(1, 2)],
        Family::Path(n) => {
            let end_adjacent = DegreePoly::from_terms([(1, 1), (2, 1)]);
            repeat(mono(2, 2), n - 4)
                .chain(repeat(end_adjacent, 2))
                .chain(repeat(mono(1, 2), 2))
                .collect()
        }
        Family::Cycle(n) => repeat(mono(2, 2), n).collect(),
        Family::CompleteBipartite(r, s) => repeat(mono(r as u64, s as u64), s)
            .chain(repeat(mono(s as u64, r as u64), r))
            .collect(),
    };
    PolySequence::new(polys)
}

/// `Some(r)` when every entry is `r·x^r`.
pub fn regularity_from_sequence(q: &PolySequence) -> Option<u64> {
    let first = q.entries.first()?;
    let (r, c) = first.terms().next().map(|(e, c)| (e, *c))?;
    if first.len() != 1 || c != r {
        return None;
    }
    q.entries.iter().all(|p| p == first).then_some(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexDp {
    pub label: String,
    pub degree: usize,
    pub dp: DegreePoly,
}

/// Invariant checks attached to a [`DpReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Consistency {
    /// `sc(dp(v)) = deg(v)` for every vertex.
    pub sc_matches_degree: bool,
    /// `sc(dp(G)) = n`.
    pub graph_sc_is_order: bool,
    /// First moment of `dp(G)` is `2m`.
    pub first_moment_is_twice_size: bool,
}

impl Consistency {
    pub fn all(&self) -> bool {
        self.sc_matches_degree && self.graph_sc_is_order && self.first_moment_is_twice_size
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DpReport {
    pub vertices: Vec<VertexDp>,
    pub graph_dp: DegreePoly,
    /// `None` when the graph has isolated vertices.
    pub sequence: Option<PolySequence>,
    pub isolated: Vec<String>,
    pub regular_r: Option<u64>,
    pub consistency: Consistency,
}

pub fn dp_report(g: &SimpleGraph) -> DpReport {
    let vertices: Vec<VertexDp> = (0..g.order())
        .map(|v| VertexDp {
            label: g.label(v).to_string(),
            degree: g.degree(v),
            dp: degree_polynomial(g, v).expect("index in range"),
        })
        .collect();
    let graph_dp = graph_degree_polynomial(g);
    let stats = graph_dp.stats();
    let consistency = Consistency {
        sc_matches_degree: vertices.iter().all(|v| v.dp.sc() == v.degree as u64),
        graph_sc_is_order: stats.sc == g.order() as u64,
        first_moment_is_twice_size: stats.first_moment == 2 * g.size() as u64,
    };
    let sequence = dp_sequence(g).ok();
    let regular_r = sequence.as_ref().and_then(regularity_from_sequence);
    DpReport {
        vertices,
        graph_dp,
        sequence,
        isolated: g.isolated_vertices().into_iter().map(|v| g.label(v).to_string()).collect(),
        regular_r,
        consistency,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::from_edge_list;

    fn p(s: &str) -> DegreePoly {
        s.parse().unwrap()
    }

    fn seq(items: &[&str]) -> Vec<DegreePoly> {
        items.iter().map(|s| p(s)).collect()
    }

    fn example_graph() -> SimpleGraph {
        from_edge_list("a b\na c\nb c\nc d").unwrap().graph
    }

    #[test]
    fn vertex_polynomials() {
        let g = example_graph();
        assert_eq!(degree_polynomial(&g, 0).unwrap(), p("x^2+x^3"));
        assert_eq!(degree_polynomial(&g, 1).unwrap(), p("x^2+x^3"));
        assert_eq!(degree_polynomial(&g, 2).unwrap(), p("2x^2+x"));
        assert_eq!(degree_polynomial(&g, 3).unwrap(), p("x^3"));
        assert!(degree_polynomial(&SimpleGraph::empty(3), 1).unwrap().is_zero());
        assert_eq!(degree_polynomial(&g, 4), Err(DpError::BadVertex(4)));
    }

    #[test]
    fn graph_polynomials() {
        assert_eq!(graph_degree_polynomial(&example_graph()), p("x+2x^2+x^3"));
        assert_eq!(graph_degree_polynomial(&Family::Complete(4).graph().unwrap()), p("4x^3"));
        assert_eq!(graph_degree_polynomial(&SimpleGraph::empty(2)), p("2"));
    }

    #[test]
    fn sequences() {
        let q = dp_sequence(&example_graph()).unwrap();
        assert_eq!(q.entries(), seq(&["2x^2+x", "x^2+x^3", "x^2+x^3", "x^3"]).as_slice());
        let c5 = dp_sequence(&Family::Cycle(5).graph().unwrap()).unwrap();
        assert_eq!(c5.entries(), vec![p("2x^2"); 5].as_slice());
        assert_eq!(
            dp_sequence(&SimpleGraph::empty(1)),
            Err(DpError::IsolatedVertexPresent(vec!["v0".into()]))
        );
    }

    #[test]
    fn closed_forms() {
        let path4 = family_dp_sequence(Family::Path(4)).unwrap();
        assert_eq!(path4.entries(), seq(&["x+x^2", "x+x^2", "x^2", "x^2"]).as_slice());
        let k4 = family_dp_sequence(Family::Complete(4)).unwrap();
        assert_eq!(k4.entries(), vec![p("3x^3"); 4].as_slice());
        let k32 = family_dp_sequence(Family::CompleteBipartite(3, 2)).unwrap();
        assert_eq!(k32.entries(), seq(&["3x^2", "3x^2", "2x^3", "2x^3", "2x^3"]).as_slice());
        let p6 = family_dp_sequence(Family::Path(6)).unwrap();
        assert_eq!(p6.entries(), seq(&["2x^2", "2x^2", "x+x^2", "x+x^2", "x^2", "x^2"]).as_slice());
        assert!(matches!(family_dp_sequence(Family::Cycle(2)), Err(DpError::Graph(_))));
        assert!(matches!(family_dp_sequence(Family::Complete(1)), Err(DpError::IsolatedVertexPresent(_))));
    }

    #[test]
    fn regularity() {
        let five = PolySequence::new(vec![p("2x^2"); 5]).unwrap();
        assert_eq!(regularity_from_sequence(&five), Some(2));
        let ex = PolySequence::new(seq(&["2x^2+x", "x^2+x^3", "x^2+x^3", "x^3"])).unwrap();
        assert_eq!(regularity_from_sequence(&ex), None);
        let mixed = PolySequence::new(seq(&["2x^2", "2x^2", "2x^2", "2x"])).unwrap();
        assert_eq!(regularity_from_sequence(&mixed), None);
        let not_r = PolySequence::new(seq(&["3x^2", "3x^2"])).unwrap();
        assert_eq!(regularity_from_sequence(&not_r), None);
    }

    #[test]
    fn duplicates_are_kept() {
        let q = PolySequence::new(seq(&["x", "x", "x"])).unwrap();
        assert_eq!(q.len(), 3);
    }

    #[test]
    fn zero_entries_are_rejected() {
        assert_eq!(PolySequence::new(vec![p("x"), DegreePoly::zero()]), Err(DpError::ZeroEntry(1)));
    }

    #[test]
    fn report_flags_isolated_vertices() {
        let g = from_edge_list("a b\nc").unwrap().graph;
        let r = dp_report(&g);
        assert_eq!(r.sequence, None);
        assert_eq!(r.isolated, vec!["c".to_string()]);
        assert_eq!(r.graph_dp, p("2x+1"));
        assert!(r.consistency.all());
    }
}
