//! Exhaustive search over small labeled graphs.
//!
//! Edge variables are the pairs `(i, j)`, `i < j`, in lexicographic order.
//! The backtracker decides them in that order, trying "absent" before
//! "present", so leaves come out in increasing order of the edge bitmask
//! read with `(0, 1)` as the most significant bit. A branch is cut as soon
//! as some endpoint needs more edges than it has undecided variables left.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use serde::Serialize;

use super::conditions::{necessary_conditions, ConditionReport};
use super::parallel::ordered_map;
use super::{DegreeSeq, RealizeError};
use crate::dp::{dp_sequence, PolySequence};
use crate::graph::{canonical_form, canonical_labeling, CanonicalForm, GraphRecord, SimpleGraph, MAX_CANON_ORDER};
use crate::DegreePoly;

/// Default order bound for exhaustive search.
pub const DEFAULT_SEARCH_BOUND: usize = 9;
/// Largest `max_n` accepted by [`realize`].
pub const MAX_SEARCH_ORDER: usize = 16;
/// Largest order accepted by [`classify_all`] and [`nonisomorphic_graphs`].
pub const MAX_CLASSIFY_ORDER: usize = 8;

fn edge_vars(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

struct Backtracker<'a> {
    vars: &'a [(usize, usize)],
    /// Target degree of each vertex.
    target: &'a [usize],
    resid: Vec<usize>,
    /// Undecided variables touching each vertex.
    rem: Vec<usize>,
    adj: Vec<u64>,
    /// `need[v][d]`: neighbors of degree `d` still owed to `v`.
    need: Option<Vec<Vec<u64>>>,
}

impl<'a> Backtracker<'a> {
    fn new(target: &'a [usize], vars: &'a [(usize, usize)], need: Option<Vec<Vec<u64>>>) -> Self {
        let n = target.len();
        Self {
            vars,
            target,
            resid: target.to_vec(),
            rem: vec![n.saturating_sub(1); n],
            adj: vec![0; n],
            need,
        }
    }

    fn feasible_start(&self) -> bool {
        self.resid.iter().zip(&self.rem).all(|(r, m)| r <= m) && self.resid.iter().sum::<usize>() % 2 == 0
    }

    fn can_link(&self, i: usize, j: usize) -> bool {
        if self.resid[i] == 0 || self.resid[j] == 0 {
            return false;
        }
        match &self.need {
            None => true,
            Some(need) => need[i][self.target[j]] > 0 && need[j][self.target[i]] > 0,
        }
    }

    fn link(&mut self, i: usize, j: usize, on: bool) {
        if on {
            self.resid[i] -= 1;
            self.resid[j] -= 1;
            self.adj[i] |= 1 << j;
            self.adj[j] |= 1 << i;
            if let Some(need) = &mut self.need {
                need[i][self.target[j]] -= 1;
                need[j][self.target[i]] -= 1;
            }
        } else {
            self.resid[i] += 1;
            self.resid[j] += 1;
            self.adj[i] &= !(1 << j);
            self.adj[j] &= !(1 << i);
            if let Some(need) = &mut self.need {
                need[i][self.target[j]] += 1;
                need[j][self.target[i]] += 1;
            }
        }
    }

    /// Runs from variable `k`. Variables below `forced.len()` only take the
    /// forced value.
    fn run(&mut self, k: usize, forced: &[bool], visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>) -> ControlFlow<()> {
        if k == self.vars.len() {
            return visit(&self.adj);
        }
        let (i, j) = self.vars[k];
        let choices: &[bool] = match forced.get(k) {
            Some(f) => std::slice::from_ref(f),
            None => &[false, true],
        };
        self.rem[i] -= 1;
        self.rem[j] -= 1;
        let mut flow = ControlFlow::Continue(());
        for &present in choices {
            if present {
                if !self.can_link(i, j) {
                    continue;
                }
                self.link(i, j, true);
            }
            if self.resid[i] <= self.rem[i] && self.resid[j] <= self.rem[j] {
                flow = self.run(k + 1, forced, visit);
            }
            if present {
                self.link(i, j, false);
            }
            if flow.is_break() {
                break;
            }
        }
        self.rem[i] += 1;
        self.rem[j] += 1;
        flow
    }
}

fn graph_from_masks(adj: &[u64]) -> SimpleGraph {
    let n = adj.len();
    let edges = (0..n).flat_map(|i| (i + 1..n).filter(move |&j| adj[i] >> j & 1 == 1).map(move |j| (i, j)));
    SimpleGraph::from_edges(n, edges).expect("masks describe a simple graph")
}

/// Next lexicographic permutation in place; `false` after the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Visits every labeled simple graph on `d.len()` vertices whose degree
/// multiset is `d`, exactly once, and returns how many were visited.
///
/// Degree assignments are taken in lexicographic order of the per-vertex
/// degree vector; within one assignment graphs come in edge-bitmask order.
/// Returning `Break` from `visit` stops the walk early.
pub fn enumerate_with_degree_sequence<F>(d: &DegreeSeq, bound: usize, mut visit: F) -> Result<u64, RealizeError>
where
    F: FnMut(&SimpleGraph) -> ControlFlow<()>,
{
    let n = d.len();
    let bound = bound.min(MAX_CANON_ORDER);
    if n > bound {
        return Err(RealizeError::TooLarge { n, bound });
    }
    let vars = edge_vars(n);
    let mut assignment: Vec<usize> = d.values().to_vec();
    assignment.sort_unstable();
    let mut count = 0u64;
    loop {
        let mut bt = Backtracker::new(&assignment, &vars, None);
        if bt.feasible_start() {
            let flow = bt.run(0, &[], &mut |adj| {
                count += 1;
                visit(&graph_from_masks(adj))
            });
            if flow.is_break() {
                return Ok(count);
            }
        }
        if !next_permutation(&mut assignment) {
            return Ok(count);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Largest sequence length searched exhaustively.
    pub max_n: usize,
    /// Search even when a necessary condition fails.
    pub skip_conditions: bool,
    /// List every isomorphism class instead of only the first.
    pub want_all_witnesses: bool,
    /// Worker threads for the search; results do not depend on it.
    pub workers: usize,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        Self { max_n: DEFAULT_SEARCH_BOUND, skip_conditions: false, want_all_witnesses: false, workers: 1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnrealizableReason {
    ConditionA,
    ConditionB,
    ConditionC,
    ProjectionNotGraphical,
    BasicFacts,
    /// Exhaustive search found no graph.
    NoWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Realizable,
    Unrealizable { reason: UnrealizableReason },
    /// Conditions pass but the sequence is longer than the search bound.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub form: CanonicalForm,
    /// The canonically labeled representative.
    pub graph: GraphRecord,
    /// Its degree polynomial sequence was recomputed and equals the target.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizabilityReport {
    pub sequence: PolySequence,
    pub n: usize,
    pub conditions: ConditionReport,
    pub searched: bool,
    pub exhaustive: bool,
    pub max_n: usize,
    pub witnesses: Vec<Witness>,
    pub nonisomorphic_count: usize,
    pub verdict: Verdict,
}

fn failing_reason(c: &ConditionReport) -> Option<UnrealizableReason> {
    use UnrealizableReason::*;
    [
        (c.cond_a.pass, ConditionA),
        (c.cond_b.pass, ConditionB),
        (c.cond_c.pass, ConditionC),
        (c.projection_graphical, ProjectionNotGraphical),
        (c.basic_facts.all(), BasicFacts),
    ]
    .into_iter()
    .find_map(|(ok, r)| (!ok).then_some(r))
}

/// Decides whether `q` is the degree polynomial sequence of some graph.
///
/// Vertices are pinned to entries of `q` (in canonical multiset order), so
/// the search only builds graphs where vertex `v` has exactly the
/// prescribed degree and neighbor-degree counts. Every realization is
/// isomorphic to one of those, so the isomorphism classes found are all of
/// them.
pub fn realize(q: &PolySequence, opts: &RealizeOptions) -> Result<RealizabilityReport, RealizeError> {
    if opts.max_n > MAX_SEARCH_ORDER {
        return Err(RealizeError::TooLarge { n: opts.max_n, bound: MAX_SEARCH_ORDER });
    }
    let n = q.len();
    let conditions = necessary_conditions(q);
    let mut report = RealizabilityReport {
        sequence: q.clone(),
        n,
        conditions,
        searched: false,
        exhaustive: false,
        max_n: opts.max_n,
        witnesses: Vec::new(),
        nonisomorphic_count: 0,
        verdict: Verdict::Undecided,
    };
    if !opts.skip_conditions {
        if let Some(reason) = failing_reason(&report.conditions) {
            report.verdict = Verdict::Unrealizable { reason };
            return Ok(report);
        }
    }
    if n > opts.max_n {
        return Ok(report);
    }

    let forms = search_classes(q, opts.workers);
    report.searched = true;
    report.exhaustive = true;
    report.nonisomorphic_count = forms.len();
    let keep = if opts.want_all_witnesses { forms.len() } else { 1 };
    report.witnesses = forms
        .into_iter()
        .take(keep)
        .map(|form| {
            let g = form.to_graph();
            let verified = dp_sequence(&g).as_ref() == Ok(q);
            Witness { graph: g.to_record(), form, verified }
        })
        .collect();
    report.verdict = if report.nonisomorphic_count > 0 {
        Verdict::Realizable
    } else {
        Verdict::Unrealizable { reason: UnrealizableReason::NoWitness }
    };
    Ok(report)
}

/// All isomorphism classes realizing `q`, in canonical-form order.
fn search_classes(q: &PolySequence, workers: usize) -> Vec<CanonicalForm> {
    let n = q.len();
    let entries = q.canonical_key();
    let target: Vec<usize> = entries.iter().map(|p| p.sc() as usize).collect();
    // a neighbor degree of n or more cannot occur
    if entries.iter().any(|p| p.degree().is_some_and(|d| d as usize >= n)) {
        return Vec::new();
    }
    let need: Vec<Vec<u64>> = entries.iter().map(|p| (0..n as u64).map(|d| p.coeff(d)).collect()).collect();
    let vars = edge_vars(n);

    let prefix_len = if workers <= 1 { 0 } else { vars.len().min((8 * workers).next_power_of_two().trailing_zeros() as usize) };
    let prefixes: Vec<Vec<bool>> = (0..1u64 << prefix_len)
        .map(|m| (0..prefix_len).map(|b| m >> (prefix_len - 1 - b) & 1 == 1).collect())
        .collect();

    let parts = ordered_map(&prefixes, workers, |forced| {
        let mut found = BTreeSet::new();
        let mut bt = Backtracker::new(&target, &vars, Some(need.clone()));
        if bt.feasible_start() {
            let _ = bt.run(0, forced, &mut |adj| {
                let g = graph_from_masks(adj);
                debug_assert_eq!(dp_sequence(&g).as_ref(), Ok(q));
                found.insert(canonical_labeling(&g, MAX_CANON_ORDER).expect("order within bound").0);
                ControlFlow::Continue(())
            });
        }
        found
    });
    parts.into_iter().flatten().collect::<BTreeSet<_>>().into_iter().collect()
}

/// One canonical form per isomorphism class of graphs on `n` vertices,
/// isolated vertices allowed, built by adding one vertex at a time with
/// every possible neighborhood and deduplicating.
pub fn nonisomorphic_graphs(n: usize, workers: usize) -> Result<Vec<CanonicalForm>, RealizeError> {
    if n > MAX_CLASSIFY_ORDER {
        return Err(RealizeError::TooLarge { n, bound: MAX_CLASSIFY_ORDER });
    }
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&SimpleGraph::empty(0))?];
    for k in 0..n {
        let parts = ordered_map(&level, workers, |parent| {
            let base: Vec<(usize, usize)> = parent.edges().iter().map(|e| (e[0], e[1])).collect();
            (0..1u64 << k)
                .map(|mask| {
                    let extra = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k));
                    let g = SimpleGraph::from_edges(k + 1, base.iter().copied().chain(extra))
                        .expect("valid extension");
                    canonical_form(&g).expect("order within bound")
                })
                .collect::<BTreeSet<_>>()
        });
        level = parts.into_iter().flatten().collect::<BTreeSet<_>>().into_iter().collect();
    }
    Ok(level)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub sequence: PolySequence,
    /// Isomorphism classes with this sequence.
    pub count: usize,
}

struct SeqKey(Vec<DegreePoly>);

impl Ord for SeqKey {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let o = a.canonical_cmp(b);
            if o != Ordering::Equal {
                return o;
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for SeqKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for SeqKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for SeqKey {}

/// Every degree polynomial sequence of graphs on `n` vertices without
/// isolated vertices, with the number of isomorphism classes realizing it.
/// Sorted by the canonical multiset order of the sequence.
pub fn classify_all(n: usize, workers: usize) -> Result<Vec<ClassEntry>, RealizeError> {
    let forms = nonisomorphic_graphs(n, workers)?;
    let mut groups: BTreeMap<SeqKey, (PolySequence, usize)> = BTreeMap::new();
    for form in forms {
        let g = form.to_graph();
        if !g.isolated_vertices().is_empty() {
            continue;
        }
        let q = dp_sequence(&g)?;
        groups.entry(SeqKey(q.canonical_key())).or_insert_with(|| (q, 0)).1 += 1;
    }
    Ok(groups.into_values().map(|(sequence, count)| ClassEntry { sequence, count }).collect())
}
