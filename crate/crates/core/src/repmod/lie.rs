//! Smallest commutator-closed matrix subspace containing given operators.

use super::OperatorMatrix;
use crate::error::{CohaError, Result};
use crate::linalg::{Rationals, Span};

#[derive(Debug)]
pub struct LieClosure {
    pub dimension: usize,
    /// Independent representatives, in insertion order.
    pub basis: Vec<OperatorMatrix>,
}

/// Iterated brackets with exact rank tracking until stabilization. The
/// resulting dimension is a property of the spanned set, so it does not
/// depend on generator order or bracket iteration order.
pub fn lie_closure_dim(generators: &[OperatorMatrix]) -> Result<LieClosure> {
    let Some(first) = generators.first() else {
        return Ok(LieClosure {
            dimension: 0,
            basis: Vec::new(),
        });
    };
    let dim = first.dim();
    if dim > 64 {
        return Err(CohaError::Capacity(format!(
            "lie closure limited to operators of size <= 64, got {dim}"
        )));
    }
    if generators.iter().any(|g| g.dim() != dim) {
        return Err(CohaError::BadInput("generators of unequal size".into()));
    }
    let mut span = Span::new(Rationals, dim * dim);
    let mut basis: Vec<OperatorMatrix> = Vec::new();
    for g in generators {
        if span.insert(g.flatten()) {
            basis.push(g.clone());
        }
    }
    // bracket every new element against everything already present
    let mut frontier_start = 0usize;
    while frontier_start < basis.len() {
        let frontier_end = basis.len();
        for i in frontier_start..frontier_end {
            for j in 0..frontier_end {
                let b = basis[i].commutator(&basis[j]);
                if !b.is_zero() && span.insert(b.flatten()) {
                    basis.push(b);
                }
            }
        }
        frontier_start = frontier_end;
    }
    Ok(LieClosure {
        dimension: basis.len(),
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::{annihilation_matrix, creation_matrix};

    #[test]
    fn single_generator() {
        let a = creation_matrix(2, 1).unwrap();
        assert_eq!(lie_closure_dim(&[a]).unwrap().dimension, 1);
    }

    #[test]
    fn d1_pair_closes_at_three() {
        let a = annihilation_matrix(1, 1).unwrap();
        let astar = creation_matrix(1, 1).unwrap();
        let c = lie_closure_dim(&[a.clone(), astar.clone()]).unwrap();
        assert_eq!(c.dimension, 3);
        let c = lie_closure_dim(&[astar, a]).unwrap();
        assert_eq!(c.dimension, 3);
    }

    #[test]
    fn order_independence_at_d2() {
        let mut gens = Vec::new();
        for n in 1..=2 {
            gens.push(annihilation_matrix(2, n).unwrap());
            gens.push(creation_matrix(2, n).unwrap());
        }
        let base = lie_closure_dim(&gens).unwrap().dimension;
        gens.reverse();
        assert_eq!(lie_closure_dim(&gens).unwrap().dimension, base);
        gens.swap(0, 2);
        assert_eq!(lie_closure_dim(&gens).unwrap().dimension, base);
    }
}
