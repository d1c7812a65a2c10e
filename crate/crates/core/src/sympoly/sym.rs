//! Canonical monomial-orbit form of vertex-grouped symmetric polynomials.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{distinct_permutations, MultiPoly, VarLayout};
use crate::error::{CohaError, Result};

/// Orbit representative: per vertex, the exponent tuple sorted
/// non-increasingly.
pub type OrbitKey = Vec<Vec<u32>>;

/// Symmetric polynomial stored by monomial orbits.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly {
    layout: VarLayout,
    terms: BTreeMap<OrbitKey, BigRational>,
}

impl SymPoly {
    pub fn zero(layout: VarLayout) -> Self {
        Self {
            layout,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(layout: VarLayout, c: BigRational) -> Self {
        let mut p = Self::zero(layout);
        p.add_orbit(p.zero_key(), c);
        p
    }

    pub fn one(layout: VarLayout) -> Self {
        Self::constant(layout, BigRational::from_integer(1.into()))
    }

    /// The orbit sum `m_key` with coefficient one.
    pub fn monomial_orbit(layout: VarLayout, key: OrbitKey) -> Result<Self> {
        validate_key(&layout, &key)?;
        let mut p = Self::zero(layout);
        p.add_orbit(key, BigRational::from_integer(1.into()));
        Ok(p)
    }

    fn zero_key(&self) -> OrbitKey {
        self.layout.counts().iter().map(|n| vec![0u32; *n]).collect()
    }

    pub fn layout(&self) -> &VarLayout {
        &self.layout
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrbitKey, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_orbits(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &OrbitKey) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_orbit(&mut self, key: OrbitKey, coeff: BigRational) {
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

    pub fn add(&self, rhs: &SymPoly) -> Result<SymPoly> {
        self.check_layout(rhs)?;
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_orbit(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SymPoly {
        Self {
            layout: self.layout.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymPoly {
        if c.is_zero() {
            return Self::zero(self.layout.clone());
        }
        Self {
            layout: self.layout.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn check_layout(&self, rhs: &SymPoly) -> Result<()> {
        if self.layout != rhs.layout {
            return Err(CohaError::LayoutMismatch(format!(
                "{:?} vs {:?}",
                self.layout.counts(),
                rhs.layout.counts()
            )));
        }
        Ok(())
    }

    /// Expand every orbit into its distinct monomials.
    pub fn expand(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.layout.clone());
        for (key, coeff) in &self.terms {
            let blocks: Vec<Vec<Vec<u32>>> =
                key.iter().map(|b| distinct_permutations(b)).collect();
            let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
            for block in &blocks {
                let mut next = Vec::with_capacity(stack.len() * block.len());
                for prefix in &stack {
                    for perm in block {
                        let mut k = prefix.clone();
                        k.extend_from_slice(perm);
                        next.push(k);
                    }
                }
                stack = next;
            }
            for k in stack {
                out.add_term(k, coeff.clone());
            }
        }
        out
    }

    /// Product in canonical form. Expansion, multiplication, regrouping.
    pub fn mul(&self, rhs: &SymPoly) -> Result<SymPoly> {
        self.check_layout(rhs)?;
        let prod = self.expand().mul(&rhs.expand());
        canonicalize(&prod).map_err(|e| {
            CohaError::InternalConsistency(format!("product of symmetric polys not symmetric: {e}"))
        })
    }

    /// Total degree of a homogeneous polynomial; mixed degrees error out.
    pub fn homogeneous_degree(&self) -> Result<i64> {
        let mut degree: Option<i64> = None;
        for key in self.terms.keys() {
            let d: i64 = key.iter().flatten().map(|e| *e as i64).sum();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Err(CohaError::Inhomogeneous(prev, d)),
                _ => {}
            }
        }
        // zero polynomial counts as degree 0
        Ok(degree.unwrap_or(0))
    }

    pub fn max_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|k| k.iter().flatten().map(|e| *e as i64).sum())
            .max()
            .unwrap_or(0)
    }
}

fn validate_key(layout: &VarLayout, key: &OrbitKey) -> Result<()> {
    if key.len() != layout.num_vertices() {
        return Err(CohaError::LayoutMismatch(format!(
            "orbit key has {} blocks, layout has {} vertices",
            key.len(),
            layout.num_vertices()
        )));
    }
    for (i, block) in key.iter().enumerate() {
        if block.len() != layout.count(i) {
            return Err(CohaError::LayoutMismatch(format!(
                "orbit key block {i} has {} entries, expected {}",
                block.len(),
                layout.count(i)
            )));
        }
        if block.windows(2).any(|w| w[0] < w[1]) {
            return Err(CohaError::BadInput(format!(
                "orbit key block {i} not sorted non-increasingly: {block:?}"
            )));
        }
    }
    Ok(())
}

/// Group a symmetric [`MultiPoly`] into orbit form, verifying symmetry: every
/// monomial of an orbit must be present with the same coefficient.
pub fn canonicalize(p: &MultiPoly) -> Result<SymPoly> {
    let layout = p.layout().clone();
    let mut grouped: BTreeMap<OrbitKey, (BigRational, usize)> = BTreeMap::new();
    for (mono, coeff) in p.terms() {
        let mut key: OrbitKey = Vec::with_capacity(layout.num_vertices());
        let mut pos = 0;
        for n in layout.counts() {
            let mut block = mono[pos..pos + n].to_vec();
            block.sort_unstable_by(|a, b| b.cmp(a));
            key.push(block);
            pos += n;
        }
        match grouped.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let (c, count) = e.get_mut();
                if *c != *coeff {
                    return Err(CohaError::NotSymmetric(format!(
                        "orbit of {mono:?} carries coefficients {c} and {coeff}"
                    )));
                }
                *count += 1;
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((coeff.clone(), 1));
            }
        }
    }
    let mut out = SymPoly::zero(layout);
    for (key, (coeff, count)) in grouped {
        let orbit_size: usize = key.iter().map(|b| distinct_permutations(b).len()).product();
        if orbit_size != count {
            return Err(CohaError::NotSymmetric(format!(
                "orbit {key:?} has {count} of {orbit_size} monomials"
            )));
        }
        out.add_orbit(key, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rat;

    fn two_vars() -> VarLayout {
        VarLayout::new(vec![2])
    }

    #[test]
    fn canonicalize_linear() {
        // x1 + x2 -> orbit (1,0) coefficient 1
        let mut p = MultiPoly::zero(two_vars());
        p.add_term(vec![1, 0], rat(1));
        p.add_term(vec![0, 1], rat(1));
        let s = canonicalize(&p).unwrap();
        assert_eq!(s.num_orbits(), 1);
        assert_eq!(s.coeff(&vec![vec![1, 0]]), rat(1));
    }

    #[test]
    fn canonicalize_product_orbit() {
        // x1 x2 -> orbit (1,1)
        let mut p = MultiPoly::zero(two_vars());
        p.add_term(vec![1, 1], rat(1));
        let s = canonicalize(&p).unwrap();
        assert_eq!(s.coeff(&vec![vec![1, 1]]), rat(1));
    }

    #[test]
    fn canonicalize_two_element_orbit() {
        // x1^2 x2 + x1 x2^2 -> orbit (2,1) coefficient 1
        let mut p = MultiPoly::zero(two_vars());
        p.add_term(vec![2, 1], rat(1));
        p.add_term(vec![1, 2], rat(1));
        let s = canonicalize(&p).unwrap();
        assert_eq!(s.num_orbits(), 1);
        assert_eq!(s.coeff(&vec![vec![2, 1]]), rat(1));
    }

    #[test]
    fn canonicalize_rejects_asymmetric() {
        let mut p = MultiPoly::zero(two_vars());
        p.add_term(vec![1, 0], rat(1));
        assert!(matches!(canonicalize(&p), Err(CohaError::NotSymmetric(_))));
        // present but with differing coefficients
        let mut p = MultiPoly::zero(two_vars());
        p.add_term(vec![1, 0], rat(1));
        p.add_term(vec![0, 1], rat(2));
        assert!(matches!(canonicalize(&p), Err(CohaError::NotSymmetric(_))));
    }

    #[test]
    fn expand_roundtrip() {
        let layout = VarLayout::new(vec![2, 1]);
        let s = SymPoly::monomial_orbit(layout, vec![vec![3, 1], vec![2]]).unwrap();
        let back = canonicalize(&s.expand()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn elementary_square() {
        // e1^2 = m_(2,0) + 2 m_(1,1) in two variables
        let e1 = SymPoly::monomial_orbit(two_vars(), vec![vec![1, 0]]).unwrap();
        let sq = e1.mul(&e1).unwrap();
        assert_eq!(sq.coeff(&vec![vec![2, 0]]), rat(1));
        assert_eq!(sq.coeff(&vec![vec![1, 1]]), rat(2));
        assert_eq!(sq.num_orbits(), 2);
    }

    #[test]
    fn unit_multiplication() {
        let layout = VarLayout::new(vec![2, 2]);
        let p = SymPoly::monomial_orbit(layout.clone(), vec![vec![2, 1], vec![1, 0]]).unwrap();
        let one = SymPoly::one(layout);
        assert_eq!(one.mul(&p).unwrap(), p);
    }

    #[test]
    fn e1_times_e2() {
        // (x1+x2)(x1 x2) = m_(2,1)
        let e1 = SymPoly::monomial_orbit(two_vars(), vec![vec![1, 0]]).unwrap();
        let e2 = SymPoly::monomial_orbit(two_vars(), vec![vec![1, 1]]).unwrap();
        let p = e1.mul(&e2).unwrap();
        assert_eq!(p.num_orbits(), 1);
        assert_eq!(p.coeff(&vec![vec![2, 1]]), rat(1));
    }

    #[test]
    fn degenerate_vertex_blocks() {
        let layout = VarLayout::new(vec![1, 0]);
        let p = SymPoly::monomial_orbit(layout, vec![vec![4], vec![]]).unwrap();
        assert_eq!(p.homogeneous_degree().unwrap(), 4);
    }

    #[test]
    fn homogeneity_detection() {
        let mut p = SymPoly::zero(two_vars());
        p.add_orbit(vec![vec![1, 0]], rat(1));
        p.add_orbit(vec![vec![1, 1]], rat(1));
        assert!(matches!(
            p.homogeneous_degree(),
            Err(CohaError::Inhomogeneous(_, _))
        ));
    }
}
