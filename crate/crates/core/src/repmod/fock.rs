//! Finite exterior Fock space.
//!
//! Basis elements `e_S = ξ_{s_1} ∧ ... ∧ ξ_{s_k}`, `s_1 < ... < s_k`, for
//! subsets `S ⊆ {1..d}`; the quotient by generators above `d` makes wedging
//! with `ξ_n`, `n > d`, act as zero.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{CohaError, Result};

/// Element of `Λ(ξ_1,...,ξ_d)`; subsets stored as bitmasks (bit `n-1` for
/// generator `n`), ascending-order sign conventions.
#[derive(Clone, Debug, PartialEq)]
pub struct FockElement {
    d: usize,
    terms: BTreeMap<u32, BigRational>,
}

impl FockElement {
    pub fn zero(d: usize) -> Result<Self> {
        if d < 1 || d > 31 {
            return Err(CohaError::BadInput(format!("fock dimension {d} out of range")));
        }
        Ok(Self {
            d,
            terms: BTreeMap::new(),
        })
    }

    /// The vacuum `e_∅`.
    pub fn vacuum(d: usize) -> Result<Self> {
        let mut v = Self::zero(d)?;
        v.add_term(0, BigRational::from_integer(1.into()));
        Ok(v)
    }

    /// Basis vector for a subset given as ascending generator indices.
    pub fn basis(d: usize, subset: &[u32]) -> Result<Self> {
        let mut mask = 0u32;
        for &n in subset {
            if n < 1 || n as usize > d {
                return Err(CohaError::BadInput(format!(
                    "generator index {n} outside 1..={d}"
                )));
            }
            if mask & (1 << (n - 1)) != 0 {
                return Err(CohaError::BadInput(format!("repeated index {n}")));
            }
            mask |= 1 << (n - 1);
        }
        let mut v = Self::zero(d)?;
        v.add_term(mask, BigRational::from_integer(1.into()));
        Ok(v)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u32) -> BigRational {
        self.terms.get(&mask).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, mask: u32, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
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

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.d != rhs.d {
            return Err(CohaError::BadInput("fock dimensions differ".into()));
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self {
                d: self.d,
                terms: BTreeMap::new(),
            };
        }
        Self {
            d: self.d,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Subset of a mask as ascending indices.
    pub fn mask_to_subset(mask: u32) -> Vec<u32> {
        (0..32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect()
    }
}

/// Wedge with `ξ_n` on the left; zero when `n` is already present or
/// exceeds `d`.
pub fn creation(n: u32, v: &FockElement) -> FockElement {
    let mut out = FockElement {
        d: v.d,
        terms: BTreeMap::new(),
    };
    if n < 1 || n as usize > v.d {
        return out;
    }
    let bit = 1u32 << (n - 1);
    for (mask, c) in &v.terms {
        if mask & bit != 0 {
            continue;
        }
        let below = (mask & (bit - 1)).count_ones();
        let signed = if below % 2 == 0 { c.clone() } else { -c.clone() };
        out.add_term(mask | bit, signed);
    }
    out
}

/// Contraction deleting `ξ_n`, with the same ascending-order Koszul sign;
/// zero when `n` is absent.
pub fn annihilation(n: u32, v: &FockElement) -> FockElement {
    let mut out = FockElement {
        d: v.d,
        terms: BTreeMap::new(),
    };
    if n < 1 || n as usize > v.d {
        return out;
    }
    let bit = 1u32 << (n - 1);
    for (mask, c) in &v.terms {
        if mask & bit == 0 {
            continue;
        }
        let below = (mask & (bit - 1)).count_ones();
        let signed = if below % 2 == 0 { c.clone() } else { -c.clone() };
        out.add_term(mask & !bit, signed);
    }
    out
}
