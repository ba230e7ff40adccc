//! Sparse univariate polynomials with nonnegative integer coefficients.
//!
//! [`Poly`] is generic over the coefficient type through the [`Coeff`] trait,
//! which any unsigned `num-traits` integer satisfies (`u32`, `u64`, `u128`,
//! and arbitrary precision types). Exponents are always `u64`.

mod order;
mod serde_impl;
mod text;

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, ToPrimitive, Unsigned, Zero};
use thiserror::Error;

pub use order::{compare_pol, compare_pol_explained, sort_non_increasing, Decision, PolOrdering};
pub use text::ParseError;

/// Coefficient type of a [`Poly`].
pub trait Coeff:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Unsigned
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromStr
        + Unsigned
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no place in the polynomial order")]
    ZeroOperand,
    #[error("degree {degree} exceeds reflection bound {bound}")]
    DegreeExceedsBound { degree: u64, bound: u64 },
    #[error("subtraction leaves a negative coefficient at x^{exponent}")]
    NegativeCoefficient { exponent: u64 },
    #[error("exponent scale factor must be positive")]
    ZeroScale,
}

fn overflow<T>() -> T {
    panic!("coefficient overflow")
}

fn coeff_from_u64<C: Coeff>(v: u64) -> C {
    C::from_u64(v).unwrap_or_else(overflow)
}

/// A polynomial `Σ a_i x^i` with `a_i ≥ 0`, stored as a map of its
/// nonzero terms. The zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: BTreeMap<u64, C>,
}

/// Coefficient sums of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CoeffStats<C> {
    /// Sum of all coefficients.
    pub sc: C,
    /// Sum of coefficients at even exponents (the constant term included).
    pub sec: C,
    /// Sum of coefficients at odd exponents.
    pub soc: C,
    /// `Σ i·a_i`, the coefficient sum of the derivative.
    pub first_moment: C,
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// `coeff · x^exp`; zero when `coeff` is zero.
    pub fn monomial(coeff: C, exp: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `x^exp`.
    pub fn x_pow(exp: u64) -> Self {
        Self::monomial(C::one(), exp)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I: IntoIterator<Item = (u64, C)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `coeff · x^exp` in place.
    pub fn add_term(&mut self, exp: u64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => *c = c.checked_add(&coeff).unwrap_or_else(overflow),
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms by ascending exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Nonzero terms by descending exponent.
    pub fn terms_desc(&self) -> impl Iterator<Item = (u64, &C)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn sc(&self) -> C {
        self.terms
            .values()
            .try_fold(C::zero(), |acc, c| acc.checked_add(c))
            .unwrap_or_else(overflow)
    }

    pub fn stats(&self) -> CoeffStats<C> {
        let mut sec = C::zero();
        let mut soc = C::zero();
        let mut first_moment = C::zero();
        for (&e, c) in &self.terms {
            let slot = if e % 2 == 0 { &mut sec } else { &mut soc };
            *slot = slot.checked_add(c).unwrap_or_else(overflow);
            let weighted = c.checked_mul(&coeff_from_u64(e)).unwrap_or_else(overflow);
            first_moment = first_moment.checked_add(&weighted).unwrap_or_else(overflow);
        }
        let sc = sec.checked_add(&soc).unwrap_or_else(overflow);
        CoeffStats { sc, sec, soc, first_moment }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            match out.terms.get_mut(&e) {
                Some(slot) => *slot = slot.checked_add(c)?,
                None => {
                    out.terms.insert(e, c.clone());
                }
            }
        }
        Some(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                let e = e1.checked_add(e2)?;
                let c = c1.checked_mul(c2)?;
                match out.terms.get_mut(&e) {
                    Some(slot) => *slot = slot.checked_add(&c)?,
                    None => {
                        out.terms.insert(e, c);
                    }
                }
            }
        }
        Some(out)
    }

    /// `self − other`, failing if any coefficient would go negative.
    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            let slot = out
                .terms
                .get_mut(&e)
                .ok_or(PolyError::NegativeCoefficient { exponent: e })?;
            *slot = slot
                .checked_sub(c)
                .ok_or(PolyError::NegativeCoefficient { exponent: e })?;
            if slot.is_zero() {
                out.terms.remove(&e);
            }
        }
        Ok(out)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: u64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (u64::checked_add(*e, k).expect("exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Tensor product: exponents multiply, `c_t = Σ_{i·j=t} a_i b_j`.
    /// The zero polynomial absorbs.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                let t = i.checked_mul(j).expect("exponent overflow");
                out.add_term(t, a.checked_mul(b).unwrap_or_else(overflow));
            }
        }
        out
    }

    /// `Σ a_i x^{i·n}`.
    pub fn scale_exponents(&self, n: u64) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::ZeroScale);
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (u64::checked_mul(*e, n).expect("exponent overflow"), c.clone()))
                .collect(),
        })
    }

    /// `Σ a_i x^{n−i}`; requires `deg ≤ n`.
    pub fn reflect_exponents(&self, n: u64) -> Result<Self, PolyError> {
        if let Some(degree) = self.degree() {
            if degree > n {
                return Err(PolyError::DegreeExceedsBound { degree, bound: n });
            }
        }
        Ok(Self {
            terms: self.terms.iter().map(|(e, c)| (n - e, c.clone())).collect(),
        })
    }

    /// A total order used for canonical (multiset) presentation: larger
    /// coefficient sum first, then lexicographic over the descending term
    /// list. Unlike [`compare_pol`] this is transitive.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sc()
            .cmp(&other.sc())
            .then_with(|| self.terms_desc().cmp(other.terms_desc()))
    }

    /// `(exponent, coefficient)` pairs by descending exponent.
    pub fn to_pairs(&self) -> Vec<(u64, C)> {
        self.terms_desc().map(|(e, c)| (e, c.clone())).collect()
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).unwrap_or_else(overflow)
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.checked_add(rhs).unwrap_or_else(overflow)
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).unwrap_or_else(overflow)
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.checked_mul(rhs).unwrap_or_else(overflow)
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::constant(C::one())
    }
}

impl<C: Coeff> Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
