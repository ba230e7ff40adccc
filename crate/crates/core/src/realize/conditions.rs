use std::collections::HashMap;

use serde::Serialize;

use crate::dp::PolySequence;
use crate::DegreePoly;

use super::{basic_facts, erdos_gallai, sc_projection, BasicFacts, DegreeSeq};

/// (a): the coefficient sums add up to an even number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CondA {
    pub pass: bool,
    pub sum: u64,
}

/// (b): every term `k·x^i` of an entry is backed by at least `k` *other*
/// entries whose coefficient sum is `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CondB {
    pub pass: bool,
    pub violation: Option<CondBViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CondBViolation {
    /// 0-based position in the sequence.
    pub entry: usize,
    pub poly: DegreePoly,
    pub exponent: u64,
    pub coefficient: u64,
    /// Other entries with coefficient sum equal to `exponent`.
    pub available: u64,
}

/// (c): the even-exponent coefficient sums, totalled separately over
/// entries of odd and of even coefficient sum, are both even.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CondC {
    pub pass: bool,
    pub odd_sc_sec_sum: u64,
    pub even_sc_sec_sum: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub cond_a: CondA,
    pub cond_b: CondB,
    pub cond_c: CondC,
    pub projection: DegreeSeq,
    pub projection_graphical: bool,
    pub basic_facts: BasicFacts,
    pub overall_necessary_pass: bool,
}

impl ConditionReport {
    /// Labels of failing checks in a fixed order: `a`, `b`, `c`,
    /// `projection`, `facts`.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.cond_a.pass {
            out.push("a");
        }
        if !self.cond_b.pass {
            out.push("b");
        }
        if !self.cond_c.pass {
            out.push("c");
        }
        if !self.projection_graphical {
            out.push("projection");
        }
        if !self.basic_facts.all() {
            out.push("facts");
        }
        out
    }
}

pub fn necessary_conditions(q: &PolySequence) -> ConditionReport {
    let sums: Vec<u64> = q.iter().map(DegreePoly::sc).collect();

    let total: u64 = sums.iter().sum();
    let cond_a = CondA { pass: total.is_multiple_of(2), sum: total };

    let mut by_sum: HashMap<u64, u64> = HashMap::new();
    for &s in &sums {
        *by_sum.entry(s).or_default() += 1;
    }
    let violation = q.iter().enumerate().find_map(|(j, f)| {
        f.terms_desc().find_map(|(i, &k)| {
            let own = u64::from(sums[j] == i);
            let available = by_sum.get(&i).copied().unwrap_or(0) - own;
            (available < k).then(|| CondBViolation {
                entry: j,
                poly: f.clone(),
                exponent: i,
                coefficient: k,
                available,
            })
        })
    });
    let cond_b = CondB { pass: violation.is_none(), violation };

    let (mut odd_sc_sec_sum, mut even_sc_sec_sum) = (0u64, 0u64);
    for (f, &s) in q.iter().zip(&sums) {
        let sec = f.stats().sec;
        if s % 2 == 1 {
            odd_sc_sec_sum += sec;
        } else {
            even_sc_sec_sum += sec;
        }
    }
    let cond_c = CondC {
        pass: odd_sc_sec_sum % 2 == 0 && even_sc_sec_sum % 2 == 0,
        odd_sc_sec_sum,
        even_sc_sec_sum,
    };

    let projection = sc_projection(q);
    let projection_graphical = erdos_gallai(&projection);
    let basic_facts = basic_facts(&projection);
    let overall_necessary_pass =
        cond_a.pass && cond_b.pass && cond_c.pass && projection_graphical && basic_facts.all();
    ConditionReport { cond_a, cond_b, cond_c, projection, projection_graphical, basic_facts, overall_necessary_pass }
}
