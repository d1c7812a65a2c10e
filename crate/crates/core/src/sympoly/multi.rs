//! Expanded multivariate polynomials over the rationals.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::VarLayout;
use crate::error::{CohaError, Result};

/// Polynomial keyed by full exponent vectors, one entry per monomial.
///
/// The monomial order is lexicographic on the concatenated exponent vector
/// with vertices in declared order; `BTreeMap` iteration realizes it.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    layout: VarLayout,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(layout: VarLayout) -> Self {
        Self {
            layout,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(layout: VarLayout, c: BigRational) -> Self {
        let key = vec![0u32; layout.total_vars()];
        let mut p = Self::zero(layout);
        p.add_term(key, c);
        p
    }

    pub fn one(layout: VarLayout) -> Self {
        Self::constant(layout, BigRational::from_integer(1.into()))
    }

    /// The monomial `x_var^power`.
    pub fn var_pow(layout: VarLayout, var: usize, power: u32) -> Self {
        let mut key = vec![0u32; layout.total_vars()];
        key[var] = power;
        let mut p = Self::zero(layout);
        p.add_term(key, BigRational::from_integer(1.into()));
        p
    }

    pub fn layout(&self) -> &VarLayout {
        &self.layout
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<u32>, coeff: BigRational) {
        debug_assert_eq!(key.len(), self.layout.total_vars());
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &MultiPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            layout: self.layout.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.layout.clone());
        }
        Self {
            layout: self.layout.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MultiPoly) -> Self {
        let mut out = Self::zero(self.layout.clone());
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let key: Vec<u32> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                out.add_term(key, c1 * c2);
            }
        }
        out
    }

    /// Multiply in place by the linear factor `x_b - x_a`.
    pub fn mul_binomial(&self, b: usize, a: usize) -> Self {
        let mut out = Self::zero(self.layout.clone());
        for (k, c) in &self.terms {
            let mut kb = k.clone();
            kb[b] += 1;
            out.add_term(kb, c.clone());
            let mut ka = k.clone();
            ka[a] += 1;
            out.add_term(ka, -c.clone());
        }
        out
    }

    /// Exact division by the linear factor `x_b - x_a`; a nonzero remainder
    /// is reported as an error.
    pub fn div_binomial_exact(&self, b: usize, a: usize) -> Result<Self> {
        // Leading monomial of the divisor in lex order: the earlier position
        // dominates the comparison.
        let (lead_var, lead_sign, trail_var) = if b < a { (b, 1i64, a) } else { (a, -1i64, b) };
        let lead_coeff = BigRational::from_integer(lead_sign.into());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.layout.clone());
        while let Some((mono, coeff)) = rem.terms.iter().next_back() {
            let mono = mono.clone();
            let coeff = coeff.clone();
            if mono[lead_var] == 0 {
                return Err(CohaError::InternalConsistency(format!(
                    "shuffle kernel division left remainder at monomial {mono:?}"
                )));
            }
            let qc = &coeff / &lead_coeff;
            let mut qmono = mono.clone();
            qmono[lead_var] -= 1;
            // rem -= qc * (x_lead - sign x_trail) stated with signs folded in
            rem.terms.remove(&mono);
            let mut tmono = qmono.clone();
            tmono[trail_var] += 1;
            rem.add_term(tmono, &qc * &lead_coeff);
            quot.add_term(qmono, qc);
        }
        Ok(quot)
    }

    /// Reinterpret into `new_layout`, sending variable `v` of `self` to
    /// variable `map[v]`. The map must be injective.
    pub fn relabel(&self, map: &[usize], new_layout: &VarLayout) -> Self {
        debug_assert_eq!(map.len(), self.layout.total_vars());
        let n = new_layout.total_vars();
        let mut out = Self::zero(new_layout.clone());
        for (k, c) in &self.terms {
            let mut key = vec![0u32; n];
            for (v, e) in k.iter().enumerate() {
                key[map[v]] = *e;
            }
            out.add_term(key, c.clone());
        }
        out
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|k| k.iter().map(|e| *e as i64).sum())
            .max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rat;

    fn xy_layout() -> VarLayout {
        VarLayout::new(vec![2])
    }

    #[test]
    fn exact_binomial_division() {
        // (x2^2 - x1^2) / (x2 - x1) = x2 + x1
        let layout = xy_layout();
        let mut f = MultiPoly::zero(layout.clone());
        f.add_term(vec![0, 2], rat(1));
        f.add_term(vec![2, 0], rat(-1));
        let q = f.div_binomial_exact(1, 0).unwrap();
        let mut expect = MultiPoly::zero(layout);
        expect.add_term(vec![1, 0], rat(1));
        expect.add_term(vec![0, 1], rat(1));
        assert_eq!(q, expect);
    }

    #[test]
    fn division_detects_remainder() {
        let layout = xy_layout();
        let mut f = MultiPoly::zero(layout);
        f.add_term(vec![0, 1], rat(1)); // x2 alone, not divisible
        assert!(f.div_binomial_exact(1, 0).is_err());
    }

    #[test]
    fn mul_then_div_roundtrip() {
        let layout = VarLayout::new(vec![3]);
        let mut f = MultiPoly::one(layout.clone());
        f.add_term(vec![1, 2, 0], rat(7));
        f.add_term(vec![0, 0, 3], rat(-2));
        let g = f.mul_binomial(2, 0);
        assert_eq!(g.div_binomial_exact(2, 0).unwrap(), f);
    }
}
