//! Central charges into the upper half-plane, with exact argument
//! comparison.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::coha::DimensionVector;
use crate::error::{CohaError, Result};

/// Additive map `Γ -> C` sending every positive class into the open upper
/// half-plane.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralCharge {
    per_vertex: Vec<(BigRational, BigRational)>,
}

impl CentralCharge {
    pub fn new(per_vertex: Vec<(BigRational, BigRational)>) -> Result<Self> {
        if per_vertex.iter().any(|(_, im)| !im.is_positive()) {
            return Err(CohaError::BadInput(
                "central charge needs im > 0 at every vertex".into(),
            ));
        }
        Ok(Self { per_vertex })
    }

    /// Every vertex at `i`: all arguments coincide.
    pub fn trivial(num_vertices: usize) -> Self {
        Self {
            per_vertex: vec![(BigRational::zero(), BigRational::from_integer(1.into())); num_vertices],
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.per_vertex.len()
    }

    pub fn components(&self) -> &[(BigRational, BigRational)] {
        &self.per_vertex
    }

    pub fn eval(&self, gamma: &DimensionVector) -> (BigRational, BigRational) {
        let mut re = BigRational::zero();
        let mut im = BigRational::zero();
        for (i, (r, m)) in self.per_vertex.iter().enumerate() {
            let c = BigRational::from_integer(gamma.get(i).into());
            re += r * &c;
            im += m * &c;
        }
        (re, im)
    }

    /// All nonzero classes share one argument (the charge is a complex
    /// scalar times a real-valued charge).
    pub fn is_degenerate(&self) -> bool {
        self.per_vertex.iter().enumerate().all(|(i, (ri, mi))| {
            self.per_vertex[..i]
                .iter()
                .all(|(rj, mj)| (ri * mj - rj * mi).is_zero())
        })
    }
}

/// Compare `Arg Z(α)` with `Arg Z(β)` exactly via the cross product
/// `re(Z(α)) im(Z(β)) − re(Z(β)) im(Z(α))`; positive means the first
/// argument is smaller.
pub fn arg_less(z: &CentralCharge, alpha: &DimensionVector, beta: &DimensionVector) -> Result<Ordering> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(CohaError::BadInput(
            "argument comparison needs nonzero classes".into(),
        ));
    }
    let (ra, ia) = z.eval(alpha);
    let (rb, ib) = z.eval(beta);
    let cross = &ra * &ib - &rb * &ia;
    Ok(if cross.is_positive() {
        Ordering::Less
    } else if cross.is_zero() {
        Ordering::Equal
    } else {
        Ordering::Greater
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rat;

    fn charge(v: Vec<(i64, i64)>) -> CentralCharge {
        CentralCharge::new(
            v.into_iter()
                .map(|(r, i)| (rat(r), rat(i)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn left_of_means_bigger_argument() {
        // Z(α) = -1 + i, Z(β) = 1 + i
        let z = charge(vec![(-1, 1), (1, 1)]);
        let a = DimensionVector::new(vec![1, 0]);
        let b = DimensionVector::new(vec![0, 1]);
        assert_eq!(arg_less(&z, &a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn collinear_classes_are_equal() {
        let z = charge(vec![(2, 3)]);
        let a = DimensionVector::new(vec![1]);
        let b = DimensionVector::new(vec![2]);
        assert_eq!(arg_less(&z, &a, &b).unwrap(), Ordering::Equal);
    }

    #[test]
    fn vertical_beats_diagonal() {
        // Z(α) = i, Z(β) = 1 + 2i: cross = 0*2 - 1*1 < 0
        let z = charge(vec![(0, 1), (1, 2)]);
        let a = DimensionVector::new(vec![1, 0]);
        let b = DimensionVector::new(vec![0, 1]);
        assert_eq!(arg_less(&z, &a, &b).unwrap(), Ordering::Greater);
        assert!(arg_less(&z, &DimensionVector::zero(2), &b).is_err());
    }

    #[test]
    fn degenerate_detection() {
        assert!(CentralCharge::trivial(3).is_degenerate());
        assert!(charge(vec![(1, 1), (2, 2)]).is_degenerate());
        assert!(!charge(vec![(0, 1), (1, 1)]).is_degenerate());
        assert!(CentralCharge::new(vec![(rat(1), rat(0))]).is_err());
    }
}
