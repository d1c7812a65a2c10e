//! Truncated power series with explicit cutoff bookkeeping.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPoly;
use crate::error::{CohaError, Result};

/// Coefficient ring of a [`TruncatedSeries`]. Implemented for rationals and
/// for Laurent polynomials (series in `x` with `q`-coefficients).
pub trait SeriesElem: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse where one exists (units only).
    fn try_inv(&self) -> Option<Self>;
}

impl SeriesElem for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl SeriesElem for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        self.monomial_inverse()
    }
}

/// Power series truncated at a fixed exponent cutoff.
///
/// Exponents may be any integer `<= cutoff`; all series arising here are
/// honest power series with nonnegative exponents. Arithmetic results carry
/// the minimum of the operand cutoffs, so a coefficient is stored only where
/// both inputs determined it.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C: SeriesElem = BigRational> {
    cutoff: i64,
    terms: BTreeMap<i64, C>,
}

impl<C: SeriesElem> TruncatedSeries<C> {
    pub fn zero(cutoff: i64) -> Self {
        assert!(cutoff >= 0, "cutoff must be nonnegative");
        Self {
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cutoff: i64) -> Self {
        Self::from_terms(cutoff, [(0, C::one())])
    }

    pub fn monomial(cutoff: i64, exp: i64, coeff: C) -> Self {
        Self::from_terms(cutoff, [(exp, coeff)])
    }

    pub fn from_terms(cutoff: i64, iter: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut s = Self::zero(cutoff);
        for (e, c) in iter {
            s.add_term(e, c);
        }
        s
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: i64, coeff: C) {
        if exp > self.cutoff || coeff.is_zero() {
            return;
        }
        let cur = self.terms.remove(&exp).unwrap_or_else(C::zero);
        let next = cur.add(&coeff);
        if !next.is_zero() {
            self.terms.insert(exp, next);
        }
    }

    /// Re-truncate to a (smaller) cutoff.
    pub fn truncate(&self, cutoff: i64) -> Self {
        let mut s = Self::zero(cutoff.min(self.cutoff));
        for (e, c) in &self.terms {
            s.add_term(*e, c.clone());
        }
        s
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut s = self.truncate(rhs.cutoff);
        for (e, c) in &rhs.terms {
            s.add_term(*e, c.clone());
        }
        s
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut s = self.truncate(rhs.cutoff);
        for (e, c) in &rhs.terms {
            s.add_term(*e, c.neg());
        }
        s
    }

    /// Cauchy product truncated at the minimum of the two cutoffs.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut s = Self::zero(self.cutoff.min(rhs.cutoff));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                if e1 + e2 > s.cutoff {
                    continue;
                }
                s.add_term(e1 + e2, c1.mul(c2));
            }
        }
        s
    }

    /// Multiplicative inverse up to the cutoff.
    ///
    /// Requires a unit constant term and no negative exponents.
    pub fn inverse(&self) -> Result<Self> {
        if self.terms.keys().next().map_or(false, |e| *e < 0) {
            return Err(CohaError::BadInput(
                "series inverse requires nonnegative exponents".into(),
            ));
        }
        let c0 = self.coeff(0);
        let c0_inv = c0.try_inv().ok_or_else(|| {
            CohaError::BadInput("series inverse requires a unit constant term".into())
        })?;
        // b_n = -c0^{-1} * sum_{k=1..n} a_k b_{n-k}
        let mut inv = Self::zero(self.cutoff);
        inv.add_term(0, c0_inv.clone());
        for n in 1..=self.cutoff {
            let mut acc = C::zero();
            for (k, a) in self.terms.range(1..=n) {
                let b = inv.coeff(n - k);
                if !b.is_zero() {
                    acc = acc.add(&a.mul(&b));
                }
            }
            inv.add_term(n, c0_inv.mul(&acc.neg()));
        }
        Ok(inv)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

pub type RationalSeries = TruncatedSeries<BigRational>;
