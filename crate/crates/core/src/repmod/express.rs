//! Change of basis into ordered generator products, and the module action
//! on the Fock space.

use num_rational::BigRational;
use num_traits::Zero;

use super::{creation, FockElement};
use crate::coha::{coha_mul, component_keys, generator, CohaElement};
use crate::error::{CohaError, Result};
use crate::linalg::{row_echelon, solve, Rationals};

fn require_a1(f: &CohaElement) -> Result<()> {
    let q = f.quiver();
    if q.num_vertices() != 1 || q.arrow_count(0, 0) != 0 {
        return Err(CohaError::BadInput(
            "generator-product basis is specific to the arrowless one-vertex quiver".into(),
        ));
    }
    Ok(())
}

/// Coordinates of a homogeneous element in the ordered-product basis
/// `ξ_{i_1} ... ξ_{i_n}`, `i_1 > ... > i_n >= 0`. Returns the index tuples
/// with their coefficients, zeros omitted.
pub fn express_in_xi(f: &CohaElement) -> Result<Vec<(Vec<u32>, BigRational)>> {
    require_a1(f)?;
    let n = f.gamma().get(0);
    let k = f.poly().homogeneous_degree()?;
    if n == 0 {
        // scalar component: coordinate on the empty product
        let c = f.poly().coeff(&vec![vec![]]);
        return Ok(if c.is_zero() { vec![] } else { vec![(vec![], c)] });
    }
    // index tuples correspond to partitions of k into <= n parts via
    // i_t = λ_t + (n − t); both sides have the same count
    let chi = crate::coha::euler_form(f.quiver(), f.gamma(), f.gamma());
    let keys: Vec<_> = component_keys(f.quiver(), f.gamma(), 2 * k + chi)
        .into_iter()
        .filter(|(m, _)| *m == 2 * k + chi)
        .map(|(_, key)| key)
        .collect();
    let tuples: Vec<Vec<u32>> = keys
        .iter()
        .map(|key| {
            key[0]
                .iter()
                .enumerate()
                .map(|(t, &lam)| lam + (n - 1 - t as u32))
                .collect()
        })
        .collect();
    // columns: coordinates of each ordered product in the orbit basis
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        let mut acc = CohaElement::unit(f.quiver().clone());
        for &i in tuple {
            acc = coha_mul(&acc, &generator(f.quiver(), 0, i))?;
        }
        cols.push(keys.iter().map(|key| acc.poly().coeff(key)).collect());
    }
    let rows: Vec<Vec<BigRational>> = (0..keys.len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    if row_echelon(&Rationals, rows.clone()).pivots.len() != keys.len() {
        return Err(CohaError::InvariantViolation(
            "ordered generator products failed to form a basis".into(),
        ));
    }
    let target: Vec<BigRational> = keys.iter().map(|key| f.poly().coeff(key)).collect();
    let sol = solve(&Rationals, &rows, &target).ok_or_else(|| {
        CohaError::InvariantViolation("inconsistent generator-product system".into())
    })?;
    Ok(tuples
        .into_iter()
        .zip(sol)
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// Left action of a homogeneous element on the Fock space: generator
/// `ξ_i` acts as creation of the `(i+1)`-st exterior generator (the algebra
/// indexes generators from 0, the Fock space from 1).
pub fn coha_act_fock(f: &CohaElement, v: &FockElement) -> Result<FockElement> {
    let coords = express_in_xi(f)?;
    let mut out = FockElement::zero(v.d())?;
    for (tuple, c) in coords {
        // the product ξ_{i_1}···ξ_{i_n} acts with the rightmost factor first
        let mut acc = v.clone();
        for &i in tuple.iter().rev() {
            acc = creation(i + 1, &acc);
            if acc.is_zero() {
                break;
            }
        }
        out = out.add(&acc.scale(&c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coha::Quiver;
    use crate::qarith::rat;
    use crate::sympoly::{SymPoly, VarLayout};
    use std::sync::Arc;

    fn a1() -> Arc<Quiver> {
        Arc::new(Quiver::a1())
    }

    fn element(gamma: u32, orbits: &[(&[u32], i64)]) -> CohaElement {
        let layout = VarLayout::new(vec![gamma as usize]);
        let mut p = SymPoly::zero(layout);
        for (key, c) in orbits {
            p.add_orbit(vec![key.to_vec()], rat(*c));
        }
        CohaElement::new(
            a1(),
            crate::coha::DimensionVector::new(vec![gamma]),
            p,
        )
        .unwrap()
    }

    #[test]
    fn constant_in_degree_two_is_xi0_xi1() {
        let f = element(2, &[(&[0, 0], 1)]);
        let coords = express_in_xi(&f).unwrap();
        assert_eq!(coords, vec![(vec![1, 0], rat(1))]);
    }

    #[test]
    fn power_sum_is_xi0_xi2() {
        // x1 + x2 = ξ_0 ξ_2 (the divided difference of x^2)
        let f = element(2, &[(&[1, 0], 1)]);
        let coords = express_in_xi(&f).unwrap();
        assert_eq!(coords, vec![(vec![2, 0], rat(1))]);
    }

    #[test]
    fn single_generator_is_itself() {
        for i in 0..4u32 {
            let f = element(1, &[(&[i], 1)]);
            assert_eq!(express_in_xi(&f).unwrap(), vec![(vec![i], rat(1))]);
        }
    }

    #[test]
    fn action_examples() {
        let d = 3;
        let vac = FockElement::vacuum(d).unwrap();
        // ξ_0 acts as creation of ξ_1
        let xi0 = element(1, &[(&[0], 1)]);
        let r = coha_act_fock(&xi0, &vac).unwrap();
        assert_eq!(r, FockElement::basis(d, &[1]).unwrap());
        // acting by a product equals acting twice
        let xi1 = element(1, &[(&[1], 1)]);
        let prod = coha_mul(&xi0, &xi1).unwrap();
        let lhs = coha_act_fock(&prod, &vac).unwrap();
        let rhs = coha_act_fock(&xi0, &coha_act_fock(&xi1, &vac).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // zero input stays zero
        let z = FockElement::zero(d).unwrap();
        assert!(coha_act_fock(&prod, &z).unwrap().is_zero());
    }

    #[test]
    fn action_kills_generators_beyond_d() {
        let d = 2;
        let vac = FockElement::vacuum(d).unwrap();
        // ξ_2 would create the third exterior generator, which is modded out
        let xi2 = element(1, &[(&[2], 1)]);
        assert!(coha_act_fock(&xi2, &vac).unwrap().is_zero());
    }
}
