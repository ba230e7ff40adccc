//! Test-side reference implementations built on adjacency matrices. They
//! share no code with the library beyond the final conversion.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, HashSet};

use degpoly_core::graph::SimpleGraph;
use degpoly_core::DegreePoly;

/// Dense adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<Vec<bool>>,
}

impl Mat {
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut a = vec![vec![false; n]; n];
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    a[i][j] = true;
                    a[j][i] = true;
                }
                bit += 1;
            }
        }
        Self { n, a }
    }

    pub fn from_graph(g: &SimpleGraph) -> Self {
        let n = g.order();
        let mut a = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            a[u][v] = true;
            a[v][u] = true;
        }
        Self { n, a }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let a = (0..n).map(|i| (0..n).map(|j| i != j && f(i, j)).collect()).collect();
        Self { n, a }
    }

    pub fn to_graph(&self) -> SimpleGraph {
        let edges = (0..self.n).flat_map(|i| (i + 1..self.n).filter(move |&j| self.a[i][j]).map(move |j| (i, j)));
        SimpleGraph::from_edges(self.n, edges).unwrap()
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.a[v].iter().filter(|&&b| b).count() as u64
    }

    /// Neighbor-degree histogram of `v`.
    pub fn dp(&self, v: usize) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for w in 0..self.n {
            if self.a[v][w] {
                *h.entry(self.degree(w)).or_insert(0) += 1;
            }
        }
        h
    }

    pub fn has_isolated(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.degree(0))
    }
}

pub fn to_map(p: &DegreePoly) -> BTreeMap<u64, u64> {
    p.terms().map(|(e, &c)| (e, c)).collect()
}

pub fn join(g: &Mat, h: &Mat) -> Mat {
    let n1 = g.n;
    Mat::from_fn(g.n + h.n, |i, j| match (i < n1, j < n1) {
        (true, true) => g.a[i][j],
        (false, false) => h.a[i - n1][j - n1],
        _ => true,
    })
}

fn product(g: &Mat, h: &Mat, adj: impl Fn(bool, bool, bool, bool) -> bool) -> Mat {
    let n2 = h.n;
    Mat::from_fn(g.n * n2, |x, y| {
        let (u, v, u2, v2) = (x / n2, x % n2, y / n2, y % n2);
        adj(u == u2, g.a[u][u2], v == v2, h.a[v][v2])
    })
}

pub fn cartesian(g: &Mat, h: &Mat) -> Mat {
    product(g, h, |ue, ua, ve, va| (ue && va) || (ve && ua))
}

pub fn tensor(g: &Mat, h: &Mat) -> Mat {
    product(g, h, |_, ua, _, va| ua && va)
}

pub fn lexicographic(g: &Mat, h: &Mat) -> Mat {
    product(g, h, |ue, ua, _, va| ua || (ue && va))
}

pub fn complement(g: &Mat) -> Mat {
    Mat::from_fn(g.n, |i, j| !g.a[i][j])
}

/// Whether some simple graph has exactly these degrees (any order), by
/// trying every edge subset.
pub fn brute_graphical(d: &[usize]) -> bool {
    let n = d.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut want = d.to_vec();
    want.sort_unstable();
    (0..1u64 << pairs.len()).any(|m| {
        let mut deg = vec![0; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if m >> b & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
        deg.sort_unstable();
        deg == want
    })
}

/// Sorted (non-increasing) degree vectors of all graphs on `n` vertices,
/// from every edge subset.
pub fn graphical_set(n: usize) -> HashSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = HashSet::new();
    let mut deg = vec![0usize; n];
    for m in 0..1u64 << pairs.len() {
        deg.iter_mut().for_each(|d| *d = 0);
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if m >> b & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
        let mut key = deg.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(key);
    }
    out
}

/// Every non-increasing sequence of length `n` with entries at most `max`.
pub fn non_increasing(n: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            go(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}
