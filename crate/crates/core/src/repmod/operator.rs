//! Operators on the Fock space in the subset basis, and the Clifford
//! relation report.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{annihilation, creation, FockElement};
use crate::error::{CohaError, Result};

/// Column-sparse exact matrix in the subset basis (basis order = bitmask
/// value). Sparse because creation/annihilation columns have at most one
/// entry, and everything here is built from them.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    cols: Vec<BTreeMap<usize, BigRational>>,
}

impl OperatorMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            cols: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for j in 0..dim {
            m.cols[j].insert(j, BigRational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> BigRational {
        self.cols[col].get(&row).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, v: BigRational) {
        if v.is_zero() {
            self.cols[col].remove(&row);
        } else {
            self.cols[col].insert(row, v);
        }
    }

    /// Build from an action on basis vectors of `Λ(ξ_1..ξ_d)`.
    pub fn from_action(d: usize, action: impl Fn(&FockElement) -> FockElement) -> Result<Self> {
        let dim = 1usize << d;
        let mut m = Self::zero(dim);
        for (j, col) in m.cols.iter_mut().enumerate() {
            let mut basis = FockElement::zero(d)?;
            basis.add_term(j as u32, BigRational::one());
            for (mask, c) in action(&basis).terms() {
                col.insert(mask as usize, c.clone());
            }
        }
        Ok(m)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (j, col) in rhs.cols.iter().enumerate() {
            for (i, c) in col {
                let cur = out.get(*i, j) + c;
                out.set(*i, j, cur);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, v)| (*i, v * c)).collect())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-BigRational::one()))
    }

    /// Composition `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (j, col) in rhs.cols.iter().enumerate() {
            for (k, c) in col {
                for (i, a) in &self.cols[*k] {
                    let cur = out.get(*i, j) + a * c;
                    out.set(*i, j, cur);
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.compose(rhs).add(&rhs.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    /// If the matrix is a scalar multiple of the identity, that scalar.
    pub fn as_scalar(&self) -> Option<BigRational> {
        let c = self.get(0, 0);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                if *i != j || *v != c {
                    return None;
                }
            }
            if !c.is_zero() && col.is_empty() {
                return None;
            }
        }
        Some(c)
    }

    /// Dense row-major vectorization (for rank computations).
    pub fn flatten(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim * self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                v[i * self.dim + j] = c.clone();
            }
        }
        v
    }
}

pub fn creation_matrix(d: usize, n: u32) -> Result<OperatorMatrix> {
    OperatorMatrix::from_action(d, |v| creation(n, v))
}

pub fn annihilation_matrix(d: usize, n: u32) -> Result<OperatorMatrix> {
    OperatorMatrix::from_action(d, |v| annihilation(n, v))
}

/// Anticommutator table of the creation/annihilation operators.
#[derive(Clone, Debug)]
pub struct CliffordReport {
    pub d: usize,
    /// `{a_m*, a_n*}` all zero.
    pub creations_anticommute: bool,
    /// `{a_m, a_n}` all zero.
    pub annihilations_anticommute: bool,
    /// `{a_m*, a_n} = δ_mn · id`.
    pub mixed_is_delta: bool,
    /// The scalar by which the central element acts on this module.
    pub central_scalar: BigRational,
    pub failures: Vec<String>,
}

impl CliffordReport {
    pub fn pass(&self) -> bool {
        self.creations_anticommute && self.annihilations_anticommute && self.mixed_is_delta
    }
}

/// Verify all Clifford anticommutation relations exactly.
pub fn clifford_report(d: usize) -> Result<CliffordReport> {
    if d == 0 || d > 12 {
        return Err(CohaError::Capacity(format!(
            "clifford check limited to 1 <= d <= 12, got {d}"
        )));
    }
    let cre: Vec<OperatorMatrix> = (1..=d as u32)
        .map(|n| creation_matrix(d, n))
        .collect::<Result<_>>()?;
    let ann: Vec<OperatorMatrix> = (1..=d as u32)
        .map(|n| annihilation_matrix(d, n))
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    let mut cc = true;
    let mut aa = true;
    let mut mixed = true;
    for m in 0..d {
        for n in 0..d {
            if !cre[m].anticommutator(&cre[n]).is_zero() {
                cc = false;
                failures.push(format!("{{a_{}*, a_{}*}} != 0", m + 1, n + 1));
            }
            if !ann[m].anticommutator(&ann[n]).is_zero() {
                aa = false;
                failures.push(format!("{{a_{}, a_{}}} != 0", m + 1, n + 1));
            }
            let mix = cre[m].anticommutator(&ann[n]);
            let expect_scalar = if m == n {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            if mix.as_scalar() != Some(expect_scalar) {
                mixed = false;
                failures.push(format!("{{a_{}*, a_{}}} != δ·id", m + 1, n + 1));
            }
        }
    }
    Ok(CliffordReport {
        d,
        creations_anticommute: cc,
        annihilations_anticommute: aa,
        mixed_is_delta: mixed,
        central_scalar: BigRational::one(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rat;

    #[test]
    fn small_clifford_tables() {
        // d=1: {a*, a} = id on the 2-dimensional space
        let r = clifford_report(1).unwrap();
        assert!(r.pass());
        let a = annihilation_matrix(1, 1).unwrap();
        let astar = creation_matrix(1, 1).unwrap();
        assert_eq!(
            astar.anticommutator(&a).as_scalar(),
            Some(rat(1))
        );
        // d=2: {a_1*, a_2} = 0
        let a2 = annihilation_matrix(2, 2).unwrap();
        let a1star = creation_matrix(2, 1).unwrap();
        assert!(a1star.anticommutator(&a2).is_zero());
        // squares of creations vanish
        let sq = creation_matrix(3, 2).unwrap().anticommutator(&creation_matrix(3, 2).unwrap());
        assert!(sq.is_zero());
    }

    #[test]
    fn report_through_d4() {
        for d in 1..=4 {
            let r = clifford_report(d).unwrap();
            assert!(r.pass(), "{:?}", r.failures);
            assert_eq!(r.central_scalar, rat(1));
        }
        assert!(clifford_report(0).is_err());
        assert!(clifford_report(13).is_err());
    }

    #[test]
    fn sparse_algebra() {
        let a = creation_matrix(2, 1).unwrap();
        let i = OperatorMatrix::identity(4);
        assert_eq!(i.compose(&a), a);
        assert_eq!(a.sub(&a), OperatorMatrix::zero(4));
        assert_eq!(i.as_scalar(), Some(rat(1)));
        assert_eq!(OperatorMatrix::zero(4).as_scalar(), Some(rat(0)));
        let mut two = OperatorMatrix::identity(3);
        two = two.scale(&rat(2));
        assert_eq!(two.as_scalar(), Some(rat(2)));
        let flat = a.flatten();
        assert_eq!(flat.len(), 16);
    }
}
