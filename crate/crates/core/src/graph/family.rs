use std::fmt;
use std::str::FromStr;

use super::{GraphError, SimpleGraph};

/// The standard graph families with closed-form degree polynomial
/// sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_n`, `n ≥ 1`.
    Complete(usize),
    /// `P_n`, `n ≥ 2`.
    Path(usize),
    /// `C_n`, `n ≥ 3`.
    Cycle(usize),
    /// `K_{r,s}`, `r ≥ s ≥ 1`.
    CompleteBipartite(usize, usize),
}

impl Family {
    /// Builds from a kind name (`complete`, `path`, `cycle`,
    /// `complete_bipartite`) and its integer parameters.
    pub fn from_kind(kind: &str, params: &[usize]) -> Result<Self, GraphError> {
        let fam = match (kind, params) {
            ("complete", [n]) => Family::Complete(*n),
            ("path", [n]) => Family::Path(*n),
            ("cycle", [n]) => Family::Cycle(*n),
            ("complete_bipartite" | "complete-bipartite" | "bipartite", [r, s]) => {
                Family::CompleteBipartite(*r, *s)
            }
            ("complete" | "path" | "cycle", _) => {
                return Err(GraphError::BadParams(format!("{kind} takes one parameter")))
            }
            ("complete_bipartite" | "complete-bipartite" | "bipartite", _) => {
                return Err(GraphError::BadParams(format!("{kind} takes two parameters")))
            }
            _ => return Err(GraphError::BadParams(format!("unknown family `{kind}`"))),
        };
        fam.validate()?;
        Ok(fam)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::BadParams(msg));
        match *self {
            Family::Complete(n) if n < 1 => bad(format!("complete requires n >= 1, got {n}")),
            Family::Path(n) if n < 2 => bad(format!("path requires n >= 2, got {n}")),
            Family::Cycle(n) if n < 3 => bad(format!("cycle requires n >= 3, got {n}")),
            Family::CompleteBipartite(r, s) if s < 1 || r < s => {
                bad(format!("complete_bipartite requires r >= s >= 1, got r={r}, s={s}"))
            }
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Complete(n) | Family::Path(n) | Family::Cycle(n) => n,
            Family::CompleteBipartite(r, s) => r + s,
        }
    }

    /// The graph itself. For `K_{r,s}` vertices `0..r` form the larger side.
    pub fn graph(&self) -> Result<SimpleGraph, GraphError> {
        self.validate()?;
        let edges: Vec<(usize, usize)> = match *self {
            Family::Complete(n) => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
            Family::Path(n) => (0..n - 1).map(|u| (u, u + 1)).collect(),
            Family::Cycle(n) => (0..n).map(|u| (u, (u + 1) % n)).collect(),
            Family::CompleteBipartite(r, s) => {
                (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))).collect()
            }
        };
        SimpleGraph::from_edges(self.order(), edges)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::CompleteBipartite(r, s) => write!(f, "K{r},{s}"),
        }
    }
}

/// Short literals: `K4`, `P5`, `C6`, `K3,2`.
impl FromStr for Family {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || GraphError::BadParams(format!("not a family literal: `{s}`"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let nums: Vec<usize> = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let fam = match (head.to_ascii_uppercase(), nums.as_slice()) {
            ('K', [n]) => Family::Complete(*n),
            ('K', [r, s]) => Family::CompleteBipartite(*r, *s),
            ('P', [n]) => Family::Path(*n),
            ('C', [n]) => Family::Cycle(*n),
            _ => return Err(bad()),
        };
        fam.validate()?;
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        let c5 = Family::Cycle(5).graph().unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        assert!(c5.degrees().iter().all(|&d| d == 2));
        let k32 = Family::CompleteBipartite(3, 2).graph().unwrap();
        assert_eq!((k32.order(), k32.size()), (5, 6));
        assert!(matches!(Family::Cycle(2).graph(), Err(GraphError::BadParams(_))));
        assert!(matches!(Family::Path(1).graph(), Err(GraphError::BadParams(_))));
        assert!(matches!(Family::Complete(0).graph(), Err(GraphError::BadParams(_))));
        assert!(matches!(Family::CompleteBipartite(2, 3).graph(), Err(GraphError::BadParams(_))));
        assert_eq!(Family::Complete(1).graph().unwrap(), SimpleGraph::empty(1));
    }

    #[test]
    fn literals() {
        assert_eq!("K4".parse::<Family>().unwrap(), Family::Complete(4));
        assert_eq!("k3,2".parse::<Family>().unwrap(), Family::CompleteBipartite(3, 2));
        assert_eq!("C5".parse::<Family>().unwrap().to_string(), "C5");
        assert!("C2".parse::<Family>().is_err());
        assert!("X5".parse::<Family>().is_err());
        assert_eq!(Family::from_kind("complete_bipartite", &[3, 2]).unwrap(), Family::CompleteBipartite(3, 2));
        assert!(Family::from_kind("cycle", &[3, 4]).is_err());
    }
}
