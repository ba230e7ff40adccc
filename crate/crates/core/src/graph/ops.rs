//! Complement, join and the three products. Product vertices are indexed
//! row-major: `(u, v) ↦ u·n2 + v`.

use std::collections::HashSet;

use super::SimpleGraph;

/// A vertex of a product graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductVertex {
    pub first: usize,
    pub second: usize,
}

impl ProductVertex {
    pub fn from_index(index: usize, n2: usize) -> Self {
        Self { first: index / n2, second: index % n2 }
    }

    pub fn index(&self, n2: usize) -> usize {
        self.first * n2 + self.second
    }

    pub fn label(&self, g: &SimpleGraph, h: &SimpleGraph) -> String {
        format!("({},{})", g.label(self.first), h.label(self.second))
    }
}

pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    let n = g.order();
    let adj = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && !g.has_edge(u, v)).collect())
        .collect();
    SimpleGraph::with_adjacency(g.labels().to_vec(), adj)
}

/// `G ∨ H`. Vertices of `G` keep indices `0..n1`, those of `H` are shifted
/// to `n1..n1+n2`. If the label sets overlap, labels get `_1` / `_2`
/// suffixes.
pub fn join(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    let (n1, n2) = (g.order(), h.order());
    let left: HashSet<&String> = g.labels().iter().collect();
    let clash = h.labels().iter().any(|l| left.contains(l));
    let labels = if clash {
        g.labels()
            .iter()
            .map(|l| format!("{l}_1"))
            .chain(h.labels().iter().map(|l| format!("{l}_2")))
            .collect()
    } else {
        g.labels().iter().chain(h.labels()).cloned().collect()
    };
    let mut adj = Vec::with_capacity(n1 + n2);
    for u in 0..n1 {
        let mut l = g.neighbors(u).to_vec();
        l.extend(n1..n1 + n2);
        adj.push(l);
    }
    for v in 0..n2 {
        let mut l: Vec<usize> = (0..n1).collect();
        l.extend(h.neighbors(v).iter().map(|&w| w + n1));
        adj.push(l);
    }
    SimpleGraph::with_adjacency(labels, adj)
}

fn product<F>(g: &SimpleGraph, h: &SimpleGraph, adjacent: F) -> SimpleGraph
where
    F: Fn(usize, usize, usize, usize) -> bool,
{
    let (n1, n2) = (g.order(), h.order());
    let n = n1 * n2;
    let mut labels = Vec::with_capacity(n);
    let mut adj = Vec::with_capacity(n);
    for a in 0..n {
        let pa = ProductVertex::from_index(a, n2);
        labels.push(pa.label(g, h));
        let row = (0..n)
            .filter(|&b| {
                let pb = ProductVertex::from_index(b, n2);
                a != b && adjacent(pa.first, pa.second, pb.first, pb.second)
            })
            .collect();
        adj.push(row);
    }
    SimpleGraph::with_adjacency(labels, adj)
}

/// `G × H`: `(u1,v1) ∼ (u2,v2)` iff one coordinate is equal and the other
/// adjacent.
pub fn cartesian(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    product(g, h, |u1, v1, u2, v2| {
        (u1 == u2 && h.has_edge(v1, v2)) || (v1 == v2 && g.has_edge(u1, u2))
    })
}

/// `G ⊗ H`: both coordinates adjacent.
pub fn tensor(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    product(g, h, |u1, v1, u2, v2| g.has_edge(u1, u2) && h.has_edge(v1, v2))
}

/// `G[H]`: first coordinates adjacent, or equal first coordinates and
/// adjacent second coordinates.
pub fn lexicographic(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    product(g, h, |u1, v1, u2, v2| g.has_edge(u1, u2) || (u1 == u2 && h.has_edge(v1, v2)))
}

#[cfg(test)]
mod tests {
    use super::super::{canonical_form, from_edge_list, Family};
    use super::*;

    fn k(n: usize) -> SimpleGraph {
        Family::Complete(n).graph().unwrap()
    }

    fn c(n: usize) -> SimpleGraph {
        Family::Cycle(n).graph().unwrap()
    }

    fn p(n: usize) -> SimpleGraph {
        Family::Path(n).graph().unwrap()
    }

    fn same(a: &SimpleGraph, b: &SimpleGraph) -> bool {
        canonical_form(a).unwrap() == canonical_form(b).unwrap()
    }

    fn sorted_degrees(g: &SimpleGraph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn complement_examples() {
        let kc = complement(&k(4));
        assert_eq!(kc.size(), 0);
        assert_eq!(kc.order(), 4);
        assert!(same(&complement(&c(5)), &c(5)));
        let g = from_edge_list("a b\na c\nb c\nc d").unwrap().graph;
        let gc = complement(&g);
        assert_eq!(gc.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 3)]);
        assert_eq!(complement(&gc), g);
    }

    #[test]
    fn join_examples() {
        assert!(same(&join(&k(1), &k(1)), &k(2)));
        let kb = join(&SimpleGraph::empty(3), &SimpleGraph::empty(2));
        assert!(same(&kb, &Family::CompleteBipartite(3, 2).graph().unwrap()));
        let wheel = join(&k(1), &c(4));
        assert_eq!(wheel.degrees(), vec![4, 3, 3, 3, 3]);
        assert_eq!(wheel.size(), 4 + 4);
    }

    #[test]
    fn join_relabels_on_clash() {
        let j = join(&k(1), &k(1));
        assert_eq!(j.labels(), ["v0_1", "v0_2"]);
        let a = from_edge_list("a b").unwrap().graph;
        let b = from_edge_list("c").unwrap().graph;
        assert_eq!(join(&a, &b).labels(), ["a", "b", "c"]);
    }

    #[test]
    fn cartesian_examples() {
        assert!(same(&cartesian(&k(2), &k(2)), &c(4)));
        let ladder = cartesian(&p(3), &k(2));
        assert_eq!(ladder.order(), 6);
        assert_eq!(sorted_degrees(&ladder), vec![2, 2, 2, 2, 3, 3]);
        assert!(same(&cartesian(&k(1), &c(5)), &c(5)));
        assert_eq!(ladder.label(3), "(v1,v1)");
    }

    #[test]
    fn tensor_examples() {
        let t = tensor(&k(2), &k(2));
        assert_eq!(t.size(), 2);
        assert_eq!(t.degrees(), vec![1, 1, 1, 1]);
        assert_eq!(sorted_degrees(&tensor(&p(3), &k(2))), vec![1, 1, 1, 1, 2, 2]);
        let iso = tensor(&k(1), &c(4));
        assert_eq!((iso.order(), iso.size()), (4, 0));
    }

    #[test]
    fn lexicographic_examples() {
        assert!(same(&lexicographic(&k(2), &k(2)), &k(4)));
        assert!(same(&lexicographic(&k(2), &SimpleGraph::empty(2)), &c(4)));
        assert!(same(&lexicographic(&k(1), &p(4)), &p(4)));
    }
}
