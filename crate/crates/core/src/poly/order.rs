//! The coefficient-cascade order on nonzero polynomials.
//!
//! Two distinct polynomials are compared by coefficient sum first. On a tie
//! the common support (exponents where both are nonzero) is walked from the
//! top down and the first differing coefficient decides. When the common
//! support runs out without a decision, the highest exponent at which the
//! coefficients differ decides (larger coefficient wins).
//!
//! The relation is antisymmetric and total but **not transitive**:
//! `x^3+2x^4 > 2x^2+x^4 > x^2+2x^3 > x^3+2x^4`, each step decided on the
//! common support. Sorting therefore goes through [`sort_non_increasing`],
//! which produces a chain where every adjacent pair is non-increasing.

use std::cmp::Ordering;

use super::{Coeff, Poly, PolyError};

/// Which rule settled a comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Decision {
    Identical,
    CoefficientSum,
    CommonSupport { exponent: u64 },
    /// Common support exhausted; decided at the highest differing exponent.
    Fallback { exponent: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct PolOrdering {
    #[serde(serialize_with = "ser_ordering")]
    pub ordering: Ordering,
    pub decision: Decision,
}

fn ser_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    })
}

pub fn compare_pol<C: Coeff>(f: &Poly<C>, g: &Poly<C>) -> Result<Ordering, PolyError> {
    compare_pol_explained(f, g).map(|o| o.ordering)
}

pub fn compare_pol_explained<C: Coeff>(f: &Poly<C>, g: &Poly<C>) -> Result<PolOrdering, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroOperand);
    }
    if f == g {
        return Ok(PolOrdering { ordering: Ordering::Equal, decision: Decision::Identical });
    }
    let by_sum = f.sc().cmp(&g.sc());
    if by_sum != Ordering::Equal {
        return Ok(PolOrdering { ordering: by_sum, decision: Decision::CoefficientSum });
    }
    for (e, a) in f.terms_desc() {
        if let Some(b) = g.terms.get(&e) {
            let o = a.cmp(b);
            if o != Ordering::Equal {
                return Ok(PolOrdering {
                    ordering: o,
                    decision: Decision::CommonSupport { exponent: e },
                });
            }
        }
    }
    // f != g, so some exponent differs
    let top = f
        .terms
        .keys()
        .chain(g.terms.keys())
        .copied()
        .filter(|&e| f.coeff(e) != g.coeff(e))
        .max()
        .expect("distinct polynomials differ somewhere");
    Ok(PolOrdering {
        ordering: f.coeff(top).cmp(&g.coeff(top)),
        decision: Decision::Fallback { exponent: top },
    })
}

/// Orders nonzero polynomials so that each entry is `≥` its successor under
/// [`compare_pol`].
///
/// Inputs are first put in [`Poly::canonical_cmp`] descending order, then
/// inserted one at a time at the last position where the chain condition
/// holds on both sides. Such a position always exists for a total
/// antisymmetric relation, so the result is deterministic in the input
/// multiset and coincides with the canonical order whenever that order is
/// already a valid chain.
pub fn sort_non_increasing<C: Coeff>(mut polys: Vec<Poly<C>>) -> Result<Vec<Poly<C>>, PolyError> {
    if polys.iter().any(Poly::is_zero) {
        return Err(PolyError::ZeroOperand);
    }
    polys.sort_by(|a, b| b.canonical_cmp(a));
    let ge = |a: &Poly<C>, b: &Poly<C>| compare_pol(a, b).map(|o| o != Ordering::Less);
    let mut chain: Vec<Poly<C>> = Vec::with_capacity(polys.len());
    for p in polys {
        let mut pos = chain.len();
        loop {
            let left_ok = pos == 0 || ge(&chain[pos - 1], &p)?;
            let right_ok = pos == chain.len() || ge(&p, &chain[pos])?;
            if left_ok && right_ok {
                break;
            }
            assert!(pos > 0, "chain insertion found no slot");
            pos -= 1;
        }
        chain.insert(pos, p);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<u64>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    fn cmp(a: &str, b: &str) -> Ordering {
        compare_pol(&p(a), &p(b)).unwrap()
    }

    #[test]
    fn worked_comparisons() {
        assert_eq!(cmp("2x^4+12x^3", "3x^5+x^2"), Ordering::Greater);
        assert_eq!(cmp("2x^4+12x^2", "x^5+13x^2"), Ordering::Less);
        assert_eq!(cmp("2x^4+12x^2", "2x^5+12x^2"), Ordering::Less);
        assert_eq!(cmp("2x^4+12x^2", "2x^4+12x^2"), Ordering::Equal);
        assert_eq!(cmp("2x^4+12x^2", "2x^4+11x^2+x"), Ordering::Greater);
    }

    #[test]
    fn decisions_are_reported() {
        let d = |a: &str, b: &str| compare_pol_explained(&p(a), &p(b)).unwrap().decision;
        assert_eq!(d("2x^4+12x^3", "3x^5+x^2"), Decision::CoefficientSum);
        assert_eq!(d("2x^4+12x^2", "x^5+13x^2"), Decision::CommonSupport { exponent: 2 });
        assert_eq!(d("2x^4+12x^2", "2x^5+12x^2"), Decision::Fallback { exponent: 5 });
        assert_eq!(d("2x^3", "x^2+x"), Decision::Fallback { exponent: 3 });
        assert_eq!(d("x", "x"), Decision::Identical);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(compare_pol(&P::zero(), &p("x")), Err(PolyError::ZeroOperand));
        assert_eq!(compare_pol(&p("x"), &P::zero()), Err(PolyError::ZeroOperand));
        assert_eq!(sort_non_increasing(vec![p("x"), P::zero()]), Err(PolyError::ZeroOperand));
    }

    #[test]
    fn three_cycle_exists() {
        let (a, b, c) = ("x^3+2x^4", "2x^2+x^4", "x^2+2x^3");
        assert_eq!(cmp(a, b), Ordering::Greater);
        assert_eq!(cmp(b, c), Ordering::Greater);
        assert_eq!(cmp(c, a), Ordering::Greater);
    }

    #[test]
    fn chain_sort_handles_cycles() {
        let input = vec![p("x^3+2x^4"), p("2x^2+x^4"), p("x^2+2x^3"), p("x"), p("5x")];
        let out = sort_non_increasing(input).unwrap();
        assert_eq!(out.len(), 5);
        for w in out.windows(2) {
            assert_ne!(compare_pol(&w[0], &w[1]).unwrap(), Ordering::Less);
        }
        assert_eq!(out[0], p("5x"));
        assert_eq!(out[4], p("x"));
    }

    #[test]
    fn chain_sort_follows_cascade_where_canonical_order_disagrees() {
        // canonical order puts x^3+x^2 ahead of 2x^2; the cascade disagrees
        let out = sort_non_increasing(vec![p("x^3+x^2"), p("2x^2")]).unwrap();
        assert_eq!(out, vec![p("2x^2"), p("x^3+x^2")]);
    }
}
