//! The q-deformed Hall module on the full flag of Grassmannian classes.
//!
//! Basis `v_0, ..., v_d`; the lowering/raising operators act with
//! symmetric q-integer coefficients. Two normalizations are provided: the
//! one printed in the source construction and the standard quantum-group
//! one (`F v_k = [d−k] v_{k+1}`), which differ in their raising
//! coefficients and hence in the commutator spectrum.

use crate::error::{CohaError, Result};
use crate::qarith::{qint, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HallSign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Paper,
    Standard,
}

/// Square operator matrix with Laurent-polynomial entries on `v_0..v_d`;
/// `entry[r][c]` is the coefficient of `v_r` in the image of `v_c`.
#[derive(Clone, Debug, PartialEq)]
pub struct QOperator {
    d: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl QOperator {
    pub fn zero(d: usize) -> Self {
        Self {
            d,
            entries: vec![vec![LaurentPoly::zero(); d + 1]; d + 1],
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.entries[r][c] = v;
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        let n = self.d + 1;
        let mut out = Self::zero(self.d);
        for r in 0..n {
            for c in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    if !self.entries[r][k].is_zero() && !rhs.entries[k][c].is_zero() {
                        acc = &acc + &(&self.entries[r][k] * &rhs.entries[k][c]);
                    }
                }
                out.entries[r][c] = acc;
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for r in 0..=self.d {
            for c in 0..=self.d {
                out.entries[r][c] = &out.entries[r][c] - &rhs.entries[r][c];
            }
        }
        out
    }

    /// Apply to a coefficient vector in the `v_k` basis.
    pub fn apply(&self, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        (0..=self.d)
            .map(|r| {
                let mut acc = LaurentPoly::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = &acc + &(&self.entries[r][c] * x);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Raising/lowering operators of the Hall module.
///
/// Lowering (`Minus`): `v_k -> [k] v_{k-1}`, `v_0 -> 0` (both conventions).
/// Raising (`Plus`): `v_k -> [k+1] v_{k+1}` as printed, or
/// `v_k -> [d-k] v_{k+1}` under the standard convention; `v_d -> 0`.
pub fn hall_rho(sign: HallSign, d: usize, convention: Convention) -> Result<QOperator> {
    if d < 1 {
        return Err(CohaError::BadInput("hall module needs d >= 1".into()));
    }
    let mut op = QOperator::zero(d);
    match sign {
        HallSign::Minus => {
            for k in 1..=d {
                op.set(k - 1, k, qint(k as i64)?);
            }
        }
        HallSign::Plus => {
            for k in 0..d {
                let c = match convention {
                    Convention::Paper => qint(k as i64 + 1)?,
                    Convention::Standard => qint((d - k) as i64)?,
                };
                op.set(k + 1, k, c);
            }
        }
    }
    Ok(op)
}

/// Diagonal of `EF − FE`; errors with the offending entry when the
/// commutator is not diagonal.
pub fn commutator_spectrum(e: &QOperator, f: &QOperator) -> Result<Vec<LaurentPoly>> {
    if e.d != f.d {
        return Err(CohaError::BadInput("operator sizes differ".into()));
    }
    let comm = e.compose(f).sub(&f.compose(e));
    for r in 0..=comm.d {
        for c in 0..=comm.d {
            if r != c && !comm.entries[r][c].is_zero() {
                return Err(CohaError::BadInput(format!(
                    "commutator is not diagonal: entry ({r},{c}) = {}",
                    comm.entries[r][c].render()
                )));
            }
        }
    }
    Ok((0..=comm.d).map(|k| comm.entries[k][k].clone()).collect())
}
