//! Finite simple undirected graphs.

mod canon;
mod edgelist;
mod family;
mod ops;

use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, DEFAULT_CANON_BOUND, MAX_CANON_ORDER};
pub use edgelist::{from_edge_list, EdgeList};
pub use family::Family;
pub use ops::{cartesian, complement, join, lexicographic, tensor, ProductVertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("empty input")]
    EmptyInput,
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("graph of order {n} exceeds bound {bound}")]
    TooLarge { n: usize, bound: usize },
}

/// Simple graph on vertices `0..n` with display labels.
///
/// Adjacency lists are kept sorted, so two graphs compare equal exactly when
/// they have the same labels and the same edge set on the same indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
}

/// Structured encoding `{n, labels, edges}`, edges as `[i, j]` with `i < j`
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices labeled `v0..`.
    pub fn empty(n: usize) -> Self {
        Self { labels: default_labels(n), adj: vec![Vec::new(); n] }
    }

    /// Graph on `n` vertices labeled `v0..` with the given edges. Repeated
    /// edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn with_adjacency(labels: Vec<String>, mut adj: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self { labels, adj }
    }

    /// Adds `u–v`; returns `false` if the edge was already present.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.order();
        if u >= n {
            return Err(GraphError::BadVertex(u));
        }
        if v >= n {
            return Err(GraphError::BadVertex(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.labels[u].clone()));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                Ok(true)
            }
        }
    }

    /// Replaces the display labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::BadParams(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Edges `(i, j)` with `i < j`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Moves vertex `v` to index `perm[v]`, carrying its label along.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length");
        let mut labels = vec![String::new(); n];
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
            adj[perm[v]] = self.adj[v].iter().map(|&w| perm[w]).collect();
        }
        Self::with_adjacency(labels, adj)
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).expect("indices in range");
                }
            }
        }
        g
    }

    pub fn to_record(&self) -> GraphRecord {
        GraphRecord {
            n: self.order(),
            labels: self.labels.clone(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_record(rec: &GraphRecord) -> Result<Self, GraphError> {
        let g = Self::from_edges(rec.n, rec.edges.iter().map(|e| (e[0], e[1])))?;
        if rec.labels.is_empty() {
            Ok(g)
        } else {
            g.with_labels(rec.labels.clone())
        }
    }

    /// Undirected DOT: one edge per line, then edgeless vertices as bare
    /// nodes, all in index order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {:?} -- {:?};", self.labels[u], self.labels[v]);
        }
        for v in self.isolated_vertices() {
            let _ = writeln!(out, "  {:?};", self.labels[v]);
        }
        out.push_str("}\n");
        out
    }

    /// Edge-list text accepted by [`from_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        for v in self.isolated_vertices() {
            let _ = writeln!(out, "{}", self.labels[v]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_output() {
        let k2 = SimpleGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(k2.to_dot(), "graph {\n  \"v0\" -- \"v1\";\n}\n");
        assert_eq!(SimpleGraph::empty(1).to_dot(), "graph {\n  \"v0\";\n}\n");
        let g = from_edge_list("a b\na c\nb c\nc d").unwrap().graph;
        let dot = g.to_dot();
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 4);
        for name in ["a", "b", "c", "d"] {
            assert!(dot.contains(&format!("\"{name}\"")));
        }
    }

    #[test]
    fn record_roundtrip_and_order() {
        let g = SimpleGraph::from_edges(4, [(2, 3), (0, 2), (1, 0)]).unwrap();
        let rec = g.to_record();
        assert_eq!(rec.edges, vec![[0, 1], [0, 2], [2, 3]]);
        assert_eq!(SimpleGraph::from_record(&rec).unwrap(), g);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(SimpleGraph::from_edges(2, [(1, 1)]), Err(GraphError::SelfLoop("v1".into())));
        assert_eq!(SimpleGraph::from_edges(2, [(0, 2)]), Err(GraphError::BadVertex(2)));
    }

    #[test]
    fn handshake() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        assert_eq!(g.size(), 6);
    }
}
