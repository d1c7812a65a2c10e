//! Graded algebra elements and the product.

use std::sync::Arc;

use num_rational::BigRational;

use super::{euler_form, DimensionVector, Quiver};
use crate::error::{CohaError, Result};
use crate::sympoly::{shuffle_sum_with_kernel, OrbitKey, SymPoly, VarLayout};

/// Homogeneous-class element: a symmetric polynomial on the variable layout
/// given by its dimension vector.
#[derive(Clone, Debug, PartialEq)]
pub struct CohaElement {
    quiver: Arc<Quiver>,
    gamma: DimensionVector,
    poly: SymPoly,
}

impl CohaElement {
    pub fn new(quiver: Arc<Quiver>, gamma: DimensionVector, poly: SymPoly) -> Result<Self> {
        let expected: Vec<usize> = gamma.components().iter().map(|&c| c as usize).collect();
        if poly.layout().counts() != expected.as_slice() {
            return Err(CohaError::LayoutMismatch(format!(
                "polynomial layout {:?} does not match dimension vector {:?}",
                poly.layout().counts(),
                gamma.components()
            )));
        }
        if gamma.len() != quiver.num_vertices() {
            return Err(CohaError::LayoutMismatch(
                "dimension vector length does not match quiver".into(),
            ));
        }
        Ok(Self { quiver, gamma, poly })
    }

    pub fn unit(quiver: Arc<Quiver>) -> Self {
        let n = quiver.num_vertices();
        let gamma = DimensionVector::zero(n);
        let poly = SymPoly::one(VarLayout::new(vec![0; n]));
        Self { quiver, gamma, poly }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn gamma(&self) -> &DimensionVector {
        &self.gamma
    }

    pub fn poly(&self) -> &SymPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            quiver: self.quiver.clone(),
            gamma: self.gamma.clone(),
            poly: self.poly.scale(c),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.quiver != rhs.quiver || self.gamma != rhs.gamma {
            return Err(CohaError::LayoutMismatch(
                "sum of elements in different components".into(),
            ));
        }
        Ok(Self {
            quiver: self.quiver.clone(),
            gamma: self.gamma.clone(),
            poly: self.poly.add(&rhs.poly)?,
        })
    }
}

/// Product via the shuffle formula; the result lives in class `γ1 + γ2`.
pub fn coha_mul(f1: &CohaElement, f2: &CohaElement) -> Result<CohaElement> {
    if f1.quiver != f2.quiver {
        return Err(CohaError::QuiverMismatch);
    }
    let poly = shuffle_sum_with_kernel(&f1.poly, &f2.poly, f1.quiver.arrows_matrix())?;
    CohaElement::new(f1.quiver.clone(), f1.gamma.add(&f2.gamma), poly)
}

/// Cohomological degree `2k + χ(γ,γ)` of a homogeneous element of
/// polynomial degree `k`.
pub fn cohdeg(f: &CohaElement) -> Result<i64> {
    let k = f.poly.homogeneous_degree()?;
    Ok(2 * k + euler_form(&f.quiver, &f.gamma, &f.gamma))
}

/// Single-vertex-class generator: the monomial `x^power` placed at `vertex`
/// in class the unit vector there. For the two-vertex quiver these are the
/// `ξ_i` (vertex 0) and `η_i` (vertex 1) generators.
pub fn generator(quiver: &Arc<Quiver>, vertex: usize, power: u32) -> CohaElement {
    let n = quiver.num_vertices();
    let gamma = DimensionVector::unit(n, vertex);
    let key: OrbitKey = (0..n)
        .map(|i| if i == vertex { vec![power] } else { vec![] })
        .collect();
    let layout = VarLayout::new(
        gamma.components().iter().map(|&c| c as usize).collect(),
    );
    let poly = SymPoly::monomial_orbit(layout, key).expect("generator key is valid");
    CohaElement::new(quiver.clone(), gamma, poly).expect("generator layout is valid")
}

/// Orbit keys of the `γ` component with `cohdeg <= max_cohdeg`, as
/// `(cohdeg, key)` pairs in canonical (degree, key) order.
pub fn component_keys(
    quiver: &Quiver,
    gamma: &DimensionVector,
    max_cohdeg: i64,
) -> Vec<(i64, OrbitKey)> {
    let chi = euler_form(quiver, gamma, gamma);
    let mut out = Vec::new();
    if max_cohdeg < chi {
        return out;
    }
    let max_k = (max_cohdeg - chi) / 2;
    let blocks: Vec<Vec<Vec<u32>>> = gamma
        .components()
        .iter()
        .map(|&c| partitions_into(c as usize, max_k))
        .collect();
    let mut keys: Vec<(i64, OrbitKey)> = vec![(0, Vec::new())];
    for block in &blocks {
        let mut next = Vec::new();
        for (deg, key) in &keys {
            for part in block {
                let d: i64 = part.iter().map(|e| i64::from(*e)).sum();
                if deg + d <= max_k {
                    let mut k = key.clone();
                    k.push(part.clone());
                    next.push((deg + d, k));
                }
            }
        }
        keys = next;
    }
    for (deg, key) in keys {
        out.push((chi + 2 * deg, key));
    }
    out.sort();
    out
}

/// Non-increasing tuples of fixed length with entries summing to at most
/// `max_sum` (zeros allowed).
fn partitions_into(len: usize, max_sum: i64) -> Vec<Vec<u32>> {
    fn rec(len: usize, max_first: i64, budget: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max_first.min(budget) {
            cur.push(v as u32);
            rec(len - 1, v, budget - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_sum >= 0 {
        rec(len, max_sum, max_sum, &mut Vec::new(), &mut out);
    }
    out
}

/// Monomial-orbit basis of the `γ` component up to a cohomological cutoff.
pub fn component_basis(
    quiver: &Arc<Quiver>,
    gamma: &DimensionVector,
    max_cohdeg: i64,
) -> Vec<CohaElement> {
    let layout = VarLayout::new(
        gamma.components().iter().map(|&c| c as usize).collect(),
    );
    component_keys(quiver, gamma, max_cohdeg)
        .into_iter()
        .map(|(_, key)| {
            let poly = SymPoly::monomial_orbit(layout.clone(), key).expect("enumerated key valid");
            CohaElement::new(quiver.clone(), gamma.clone(), poly).expect("layout consistent")
        })
        .collect()
}
