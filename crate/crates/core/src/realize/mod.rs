//! Realizability of integer degree sequences and of degree polynomial
//! sequences.

mod conditions;
mod parallel;
mod search;
mod seqfile;

use serde::Serialize;
use thiserror::Error;

use crate::dp::{DpError, PolySequence};
use crate::graph::{GraphError, SimpleGraph};

pub use conditions::{necessary_conditions, CondA, CondB, CondBViolation, CondC, ConditionReport};
pub use search::{
    classify_all, enumerate_with_degree_sequence, nonisomorphic_graphs, realize, ClassEntry, RealizabilityReport,
    RealizeOptions, UnrealizableReason, Verdict, Witness, DEFAULT_SEARCH_BOUND, MAX_CLASSIFY_ORDER,
    MAX_SEARCH_ORDER,
};
pub use seqfile::{parse_sequence, SeqParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("degree sequence is not non-increasing at position {0}")]
    NotSorted(usize),
    #[error("order {n} exceeds search bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error(transparent)]
    Dp(#[from] DpError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A non-increasing sequence of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeSeq(Vec<usize>);

impl DegreeSeq {
    pub fn new(values: Vec<usize>) -> Result<Self, RealizeError> {
        if let Some(i) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(RealizeError::NotSorted(i + 1));
        }
        Ok(Self(values))
    }

    pub fn from_unsorted(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Sum of coefficients of each entry, re-sorted non-increasing.
pub fn sc_projection(q: &PolySequence) -> DegreeSeq {
    DegreeSeq::from_unsorted(q.iter().map(|p| p.sc() as usize).collect())
}

/// Elementary necessary conditions on a graphical sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BasicFacts {
    /// The sum is even.
    pub even_sum: bool,
    /// Every entry is at most `n − 1`.
    pub within_max_degree: bool,
    /// `Σ ≤ n(n−1)`, and when all entries are positive also
    /// `2⌊(n+1)/2⌋ ≤ Σ`.
    pub sum_bounds: bool,
    /// With no zero entry, some value repeats.
    pub repeated_value: bool,
}

impl BasicFacts {
    pub fn all(&self) -> bool {
        self.even_sum && self.within_max_degree && self.sum_bounds && self.repeated_value
    }
}

pub fn basic_facts(d: &DegreeSeq) -> BasicFacts {
    let n = d.len();
    let sum = d.sum();
    let positive = d.values().iter().all(|&x| x > 0);
    let lower_ok = !positive || 2 * n.div_ceil(2) <= sum;
    let repeated_value = !positive || n < 2 || d.values().windows(2).any(|w| w[0] == w[1]);
    BasicFacts {
        even_sum: sum.is_multiple_of(2),
        within_max_degree: d.values().iter().all(|&x| x < n.max(1)),
        sum_bounds: lower_ok && sum <= n * n.saturating_sub(1),
        repeated_value,
    }
}

/// Erdős–Gallai: even sum and, for every `j`,
/// `Σ_{i≤j} a_i − j(j−1) ≤ Σ_{k>j} min(j, a_k)`.
pub fn erdos_gallai(d: &DegreeSeq) -> bool {
    let a = d.values();
    let n = a.len();
    if !d.sum().is_multiple_of(2) {
        return false;
    }
    let mut head = 0usize;
    for j in 1..=n {
        head += a[j - 1];
        let tail: usize = a[j..].iter().map(|&x| x.min(j)).sum();
        if head > j * (j - 1) + tail {
            return false;
        }
    }
    true
}

/// Havel–Hakimi reduction. Returns a realizing graph (vertex `i` has degree
/// `d[i]`) when the sequence is graphical. The witness realizes the integer
/// sequence only.
pub fn havel_hakimi(d: &DegreeSeq) -> Option<SimpleGraph> {
    let n = d.len();
    let mut residual: Vec<(usize, usize)> = d.values().iter().copied().zip(0..n).collect();
    let mut g = SimpleGraph::empty(n);
    loop {
        residual.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let Some(&(k, v)) = residual.first() else {
            return Some(g);
        };
        if k == 0 {
            return Some(g);
        }
        if k >= residual.len() {
            return None;
        }
        for slot in residual[1..=k].iter_mut() {
            if slot.0 == 0 {
                return None;
            }
            slot.0 -= 1;
            g.add_edge(v, slot.1).expect("distinct in-range vertices");
        }
        residual.remove(0);
    }
}
