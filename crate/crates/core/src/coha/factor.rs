//! Quantum-dilogarithm factorization of single-vertex dimension series.
//!
//! A series with constant term 1 is peeled into the normal form
//! `prod_{n>=1} prod_j (1 - q^j x^n)^{c_{n,j}}`, extracting factors in
//! increasing `n`, then increasing `j`. Factors with negative `j` shift
//! information downward when removed, so the extractor tracks, per class,
//! the exponent below which the residual is still exact, and only reads
//! coefficients inside that range.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{DimensionVector, GradedSeries};
use crate::error::{CohaError, Result};
use crate::qarith::LaurentPoly;

/// Multiplicities `c_{n,j}` of the factors `(1 - q^j x^n)`, plus the
/// exponent range per `n` that the extraction could certify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationTable {
    pub entries: BTreeMap<(u32, i64), i64>,
    pub valid_to: BTreeMap<u32, i64>,
}

impl FactorizationTable {
    pub fn multiplicity(&self, n: u32, j: i64) -> i64 {
        self.entries.get(&(n, j)).copied().unwrap_or(0)
    }
}

/// Generalized binomial coefficient `C(e, k)` for integer `e` (possibly
/// negative); always an integer.
fn gen_binom(e: i64, k: u32) -> BigInt {
    let mut num = BigRational::one();
    for t in 0..i64::from(k) {
        num *= BigRational::from_integer(BigInt::from(e - t));
        num /= BigRational::from_integer(BigInt::from(t + 1));
    }
    assert!(num.is_integer());
    num.to_integer()
}

struct Residual {
    bound: u32,
    coeffs: Vec<LaurentPoly>,
    valid: Vec<i64>,
}

impl Residual {
    fn from_series(s: &GradedSeries) -> Result<Self> {
        if s.bound().len() != 1 {
            return Err(CohaError::BadInput(
                "factorization requires a single-vertex grading".into(),
            ));
        }
        let bound = s.bound().get(0);
        let coeffs = (0..=bound)
            .map(|n| s.coeff(&DimensionVector::new(vec![n])))
            .collect();
        Ok(Self {
            bound,
            coeffs,
            valid: vec![s.q_cutoff(); bound as usize + 1],
        })
    }

    /// Multiply by `(1 - q^j x^n)^e`, updating the per-class validity and
    /// re-truncating.
    fn mul_factor(&mut self, n: u32, j: i64, e: i64) {
        let max_k = self.bound / n;
        let factor: Vec<(i64, BigRational)> = (0..=max_k)
            .map(|k| {
                let c = gen_binom(e, k) * BigInt::from(-1i64).pow(k);
                (j * i64::from(k), BigRational::from_integer(c))
            })
            .collect();
        let mut new_coeffs = Vec::with_capacity(self.coeffs.len());
        let mut new_valid = Vec::with_capacity(self.valid.len());
        for m in 0..=self.bound {
            let mut acc = LaurentPoly::zero();
            let mut valid = self.valid[m as usize];
            for k in 0..=(m / n) {
                let (shift, c) = &factor[k as usize];
                if c.is_zero() {
                    continue;
                }
                let src = (m - k * n) as usize;
                acc = &acc + &self.coeffs[src].shift(*shift).scale(c);
                if k >= 1 {
                    valid = valid.min(self.valid[src] + shift);
                }
            }
            new_coeffs.push(acc.truncate_above(valid));
            new_valid.push(valid);
        }
        self.coeffs = new_coeffs;
        self.valid = new_valid;
    }
}

/// Extract the factorization table of a series with constant term 1.
pub fn factor_dt_series(s: &GradedSeries) -> Result<FactorizationTable> {
    let mut r = Residual::from_series(s)?;
    if !r.coeffs[0].is_one() {
        return Err(CohaError::BadInput(
            "factorization requires constant term 1".into(),
        ));
    }
    let mut entries = BTreeMap::new();
    let mut valid_to = BTreeMap::new();
    for n in 1..=r.bound {
        // repeatedly clear the lowest certified exponent of the x^n slot
        loop {
            let slot = r.coeffs[n as usize].truncate_above(r.valid[n as usize]);
            let Some(j) = slot.min_exp() else {
                break;
            };
            let coeff = slot.coeff(j);
            if !coeff.is_integer() {
                return Err(CohaError::InvariantViolation(format!(
                    "non-integer factor multiplicity {coeff} at n={n}, j={j}"
                )));
            }
            let c: i64 = i64::try_from(-coeff.to_integer()).map_err(|_| {
                CohaError::InvariantViolation("factor multiplicity overflow".into())
            })?;
            entries.insert((n, j), c);
            // divide the factor out
            r.mul_factor(n, j, -c);
            let leftover = r.coeffs[n as usize]
                .truncate_above(r.valid[n as usize])
                .coeff(j);
            if !leftover.is_zero() {
                return Err(CohaError::InternalConsistency(
                    "factor removal did not clear the extracted coefficient".into(),
                ));
            }
        }
        valid_to.insert(n, r.valid[n as usize]);
    }
    Ok(FactorizationTable { entries, valid_to })
}

/// Expand the product `prod (1 - q^j x^n)^{c_{n,j}}` back into a series,
/// mirroring the extraction's validity bookkeeping so the two can be
/// compared where both are exact.
pub fn reconstruct_product(
    table: &FactorizationTable,
    bound_n: u32,
    q_cutoff: i64,
) -> (GradedSeries, Vec<i64>) {
    let mut r = Residual {
        bound: bound_n,
        coeffs: std::iter::once(LaurentPoly::one())
            .chain((1..=bound_n).map(|_| LaurentPoly::zero()))
            .collect(),
        valid: vec![q_cutoff; bound_n as usize + 1],
    };
    for (&(n, j), &c) in &table.entries {
        if n <= bound_n && c != 0 {
            r.mul_factor(n, j, c);
        }
    }
    let mut s = GradedSeries::zero(DimensionVector::new(vec![bound_n]), q_cutoff);
    for n in 0..=bound_n {
        s.set_coeff(
            DimensionVector::new(vec![n]),
            r.coeffs[n as usize].clone(),
        );
    }
    (s, r.valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coha::series::single_vertex_factor;
    use crate::coha::{dt_series, Quiver};

    #[test]
    fn already_a_factor() {
        // s = 1 - q^2 x -> {(1,2): 1}
        let s = single_vertex_factor(3, 10, -1, 2, 1, false);
        let t = factor_dt_series(&s).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.multiplicity(1, 2), 1);
    }

    #[test]
    fn geometric_inverse() {
        // s = (1 - q x)^{-1} -> {(1,1): -1}
        let s = single_vertex_factor(4, 12, -1, 1, 1, true);
        let t = factor_dt_series(&s).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.multiplicity(1, 1), -1);
    }

    #[test]
    fn rejects_non_unit_constant() {
        let mut s = GradedSeries::zero(DimensionVector::new(vec![2]), 5);
        s.set_coeff(DimensionVector::new(vec![1]), LaurentPoly::one());
        assert!(factor_dt_series(&s).is_err());
    }

    #[test]
    fn a1_factor_pattern() {
        // (1+y) = (1-y^2)/(1-y) per odd row: c_{1,2k+1} = -1, c_{2,4k+2} = +1
        let s = dt_series(&Quiver::a1(), &DimensionVector::new(vec![4]), 24).unwrap();
        let t = factor_dt_series(&s).unwrap();
        for k in 0..8 {
            assert_eq!(t.multiplicity(1, 2 * k + 1), -1, "c_(1,{})", 2 * k + 1);
        }
        for k in 0..5 {
            assert_eq!(t.multiplicity(2, 4 * k + 2), 1, "c_(2,{})", 4 * k + 2);
        }
        assert_eq!(t.multiplicity(1, 2), 0);
    }

    #[test]
    fn roundtrip_a1_q1_q2() {
        for (quiver, bound, cutoff) in [
            (Quiver::a1(), 5u32, 30i64),
            (Quiver::loops(1), 5, 30),
            (Quiver::loops(2), 5, 24),
        ] {
            let s = dt_series(&quiver, &DimensionVector::new(vec![bound]), cutoff).unwrap();
            let t = factor_dt_series(&s).unwrap();
            let (r, valid) = reconstruct_product(&t, bound, cutoff);
            for n in 0..=bound {
                let g = DimensionVector::new(vec![n]);
                let v = valid[n as usize].min(t.valid_to.get(&n).copied().unwrap_or(cutoff));
                assert_eq!(
                    s.coeff(&g).truncate_above(v),
                    r.coeff(&g).truncate_above(v),
                    "quiver loops={} n={n}",
                    quiver.arrow_count(0, 0),
                );
                // the certified window is genuinely useful
                assert!(v >= crate::coha::euler_form(&quiver, &g, &g) + 6 || n == 0);
            }
        }
    }
}
