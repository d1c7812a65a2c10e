//! Graded dimension series of the algebra.

use std::collections::BTreeMap;

use num_traits::Signed;

use super::{euler_form, DimensionVector, Quiver};
use crate::error::{CohaError, Result};
use crate::qarith::LaurentPoly;
use crate::sympoly::{hilbert_series_sym, VarLayout};

/// Series graded by dimension vectors inside a finite box, with Laurent
/// coefficients in `q` truncated at `q_cutoff` (exponents above the cutoff
/// are dropped; everything below is exact).
#[derive(Clone, Debug, PartialEq)]
pub struct GradedSeries {
    bound: DimensionVector,
    q_cutoff: i64,
    terms: BTreeMap<DimensionVector, LaurentPoly>,
}

impl GradedSeries {
    pub fn zero(bound: DimensionVector, q_cutoff: i64) -> Self {
        Self {
            bound,
            q_cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: DimensionVector, q_cutoff: i64) -> Self {
        let mut s = Self::zero(bound, q_cutoff);
        let zero = DimensionVector::zero(s.bound.len());
        s.set_coeff(zero, LaurentPoly::one());
        s
    }

    pub fn bound(&self) -> &DimensionVector {
        &self.bound
    }

    pub fn q_cutoff(&self) -> i64 {
        self.q_cutoff
    }

    pub fn coeff(&self, gamma: &DimensionVector) -> LaurentPoly {
        self.terms.get(gamma).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn set_coeff(&mut self, gamma: DimensionVector, coeff: LaurentPoly) {
        assert!(gamma.le(&self.bound), "class outside the cutoff box");
        let truncated = coeff.truncate_above(self.q_cutoff);
        if truncated.is_zero() {
            self.terms.remove(&gamma);
        } else {
            self.terms.insert(gamma, truncated);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DimensionVector, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Componentwise-convolution product, truncated to the smaller box and
    /// the smaller `q`-cutoff.
    pub fn mul(&self, rhs: &Self) -> Self {
        let bound = DimensionVector::new(
            self.bound
                .components()
                .iter()
                .zip(rhs.bound.components())
                .map(|(a, b)| *a.min(b))
                .collect(),
        );
        let mut out = Self::zero(bound.clone(), self.q_cutoff.min(rhs.q_cutoff));
        for gamma in DimensionVector::box_iter(&bound) {
            let mut acc = LaurentPoly::zero();
            for (g1, c1) in &self.terms {
                if !g1.le(&gamma) {
                    continue;
                }
                let Some(g2) = gamma.checked_sub(g1) else {
                    continue;
                };
                if let Some(c2) = rhs.terms.get(&g2) {
                    acc = &acc + &(c1 * c2);
                }
            }
            out.set_coeff(gamma, acc);
        }
        out
    }
}

/// Dimension series of one graded component: `q^{χ(γ,γ)}` times the Hilbert
/// series of symmetric polynomials with variables in cohomological degree 2.
/// The coefficient of `q^m` counts basis elements of that cohomological
/// degree.
pub fn component_series(q: &Quiver, gamma: &DimensionVector, q_cutoff: i64) -> Result<LaurentPoly> {
    let chi = euler_form(q, gamma, gamma);
    if q_cutoff < chi {
        return Ok(LaurentPoly::zero());
    }
    let max_k = (q_cutoff - chi) / 2;
    let layout = VarLayout::new(gamma.components().iter().map(|&c| c as usize).collect());
    let hs = hilbert_series_sym(&layout, max_k)?;
    let mut out = LaurentPoly::zero();
    for (k, c) in hs.terms() {
        out.add_term(chi + 2 * k, c.clone());
    }
    Ok(out)
}

/// Full dimension series over a finite box of classes.
pub fn dt_series(q: &Quiver, bound: &DimensionVector, q_cutoff: i64) -> Result<GradedSeries> {
    if bound.len() != q.num_vertices() {
        return Err(CohaError::BadInput(
            "cutoff box length does not match quiver".into(),
        ));
    }
    let mut s = GradedSeries::zero(bound.clone(), q_cutoff);
    for gamma in DimensionVector::box_iter(bound) {
        s.set_coeff(gamma.clone(), component_series(q, &gamma, q_cutoff)?);
    }
    Ok(s)
}

/// `(1 + c q^j x^n)^{±1}` as a graded series over a single-vertex box.
/// The inverse expands the geometric series; both are exact within the box.
pub fn single_vertex_factor(
    bound_n: u32,
    q_cutoff: i64,
    c: i64,
    j: i64,
    n: u32,
    inverse: bool,
) -> GradedSeries {
    assert!(n >= 1);
    let bound = DimensionVector::new(vec![bound_n]);
    let mut s = GradedSeries::zero(bound, q_cutoff);
    s.set_coeff(DimensionVector::new(vec![0]), LaurentPoly::one());
    if !inverse {
        if n <= bound_n {
            s.set_coeff(
                DimensionVector::new(vec![n]),
                LaurentPoly::monomial(j, crate::qarith::rat(c)),
            );
        }
        return s;
    }
    let mut k = 1u32;
    while k * n <= bound_n {
        s.set_coeff(
            DimensionVector::new(vec![k * n]),
            LaurentPoly::monomial(j * i64::from(k), crate::qarith::rat((-c).pow(k))),
        );
        k += 1;
    }
    s
}

/// Number of basis elements of the component in each cohomological degree,
/// as integers (sanity accessor used by tests and the freeness check).
pub fn series_counts(p: &LaurentPoly) -> BTreeMap<i64, i64> {
    p.terms()
        .map(|(e, c)| {
            assert!(c.is_integer() && !c.is_negative());
            (e, i64::try_from(c.to_integer()).expect("count fits i64"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coha::component_keys;
    use crate::qarith::rat;

    #[test]
    fn a1_component_series() {
        // γ=1: q + q^3 + q^5 + ...
        let q = Quiver::a1();
        let s = component_series(&q, &DimensionVector::new(vec![1]), 9).unwrap();
        let expect = LaurentPoly::from_terms([(1, rat(1)), (3, rat(1)), (5, rat(1)), (7, rat(1)), (9, rat(1))]);
        assert_eq!(s, expect);
    }

    #[test]
    fn q2_component_series_negative_shift() {
        let q = Quiver::loops(2);
        let s = component_series(&q, &DimensionVector::new(vec![1]), 3).unwrap();
        let expect = LaurentPoly::from_terms([(-1, rat(1)), (1, rat(1)), (3, rat(1))]);
        assert_eq!(s, expect);
    }

    #[test]
    fn gamma_zero_coefficient_is_one() {
        let q = Quiver::a2();
        let s = dt_series(&q, &DimensionVector::new(vec![2, 2]), 10).unwrap();
        assert!(s.coeff(&DimensionVector::zero(2)).is_one());
    }

    #[test]
    fn counts_match_component_basis() {
        let q = Quiver::a2();
        for gamma in DimensionVector::box_iter(&DimensionVector::new(vec![2, 1])) {
            if gamma.total() > 3 {
                continue;
            }
            let cutoff = euler_form(&q, &gamma, &gamma) + 9;
            let s = component_series(&q, &gamma, cutoff).unwrap();
            let counts = series_counts(&s);
            let keys = component_keys(&q, &gamma, cutoff);
            for (m, count) in counts {
                let n = keys.iter().filter(|(d, _)| *d == m).count() as i64;
                assert_eq!(count, n, "gamma {:?} cohdeg {m}", gamma);
            }
        }
    }
}
