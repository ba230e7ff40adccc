//! Exact canonical labeling by partition refinement and individualization,
//! with automorphism pruning.
//!
//! The search tree is built from an equitable-refinement procedure that only
//! looks at the partition and adjacency counts, so it commutes with vertex
//! relabeling. The canonical form is the lexicographically largest adjacency
//! code over all leaves. Subtrees are skipped when a known automorphism that
//! fixes the current prefix maps the branching vertex onto an explored one,
//! and the search backjumps to the divergence node whenever a leaf
//! reproduces an earlier code.

use serde::Serialize;

use super::{GraphError, SimpleGraph};

/// Order bound used by [`canonical_form`].
pub const DEFAULT_CANON_BOUND: usize = 16;
/// Hard limit: adjacency rows are `u64` bitmasks.
pub const MAX_CANON_ORDER: usize = 64;

/// Sorted edge list of a graph under its canonical vertex order. Two graphs
/// are isomorphic exactly when their forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// The canonically relabeled graph (labels `v0..`).
    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))
            .expect("canonical form holds a valid edge set")
    }
}

/// [`canonical_labeling`] with [`DEFAULT_CANON_BOUND`], form only.
pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g, DEFAULT_CANON_BOUND).map(|(form, _)| form)
}

/// Returns the canonical form and the relabeling `perm` with
/// `g.permuted(&perm)` equal to the form's graph (up to labels).
pub fn canonical_labeling(g: &SimpleGraph, bound: usize) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let n = g.order();
    let bound = bound.min(MAX_CANON_ORDER);
    if n > bound {
        return Err(GraphError::TooLarge { n, bound });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut search = Search { n, adj, first: None, best: None, automorphisms: Vec::new(), backjump: None };
    let mut cells = if n == 0 { Vec::new() } else { vec![(0..n).collect::<Vec<_>>()] };
    search.refine(&mut cells);
    search.descend(cells, &mut Vec::new());

    let best = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (i, &v) in best.lab.iter().enumerate() {
        perm[v] = i;
    }
    let mut edges = Vec::new();
    for (i, row) in best.code.iter().enumerate() {
        for j in i + 1..n {
            if row >> j & 1 == 1 {
                edges.push([i, j]);
            }
        }
    }
    Ok((CanonicalForm { n, edges }, perm))
}

struct Leaf {
    code: Vec<u64>,
    /// `lab[i]` is the vertex placed at position `i`.
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
    /// Depth of the node that should resume after an automorphism was found.
    backjump: Option<usize>,
}

fn mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | (1 << v))
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search {
    /// Splits cells by neighbor counts into each splitter cell until the
    /// partition is equitable. Sub-cells are ordered by ascending count.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        'outer: loop {
            for si in 0..cells.len() {
                let splitter = mask(&cells[si]);
                let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> =
                        cell.iter().map(|&v| ((self.adj[v] & splitter).count_ones(), v)).collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for k in 1..=keyed.len() {
                        if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                            next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                            start = k;
                        }
                    }
                }
                if next.len() != cells.len() {
                    *cells = next;
                    continue 'outer;
                }
            }
            return;
        }
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells, path);
            return;
        };
        let depth = path.len();
        let cell = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() && self.same_orbit(w, &explored, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![w]);
            child.push(cell.iter().copied().filter(|&v| v != w).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.refine(&mut child);

            path.push(w);
            self.descend(child, path);
            path.pop();
            explored.push(w);

            if let Some(level) = self.backjump {
                if level < depth {
                    return;
                }
                self.backjump = None;
            }
        }
    }

    /// Whether some automorphism fixing `prefix` pointwise maps `w` into the
    /// orbit of an explored vertex.
    fn same_orbit(&self, w: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (v, &image) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let code: Vec<u64> = lab
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                let mut rest = self.adj[v];
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    row |= 1 << pos[w];
                    rest &= rest - 1;
                }
                row
            })
            .collect();
        let leaf = Leaf { code, lab, path: path.to_vec() };

        let Some(first) = &self.first else {
            self.first = Some(Leaf { code: leaf.code.clone(), lab: leaf.lab.clone(), path: leaf.path.clone() });
            self.best = Some(leaf);
            return;
        };
        if first.code == leaf.code {
            let gamma = automorphism(&first.lab, &leaf.lab);
            self.backjump = Some(common_prefix(&first.path, &leaf.path));
            self.automorphisms.push(gamma);
            return;
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.code.cmp(&best.code) {
            std::cmp::Ordering::Greater => self.best = Some(leaf),
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(&best.lab, &leaf.lab);
                self.backjump = Some(common_prefix(&best.path, &leaf.path));
                self.automorphisms.push(gamma);
            }
            std::cmp::Ordering::Less => {}
        }
    }
}

/// `γ(from[i]) = to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}
