//! Vertex-grouped symmetric polynomials and the shuffle-product kernel.
//!
//! Elements of the Hall algebra of a quiver live in rings of polynomials
//! symmetric under independent permutations of each vertex's variable
//! group. [`SymPoly`] stores them in canonical monomial-orbit form;
//! [`MultiPoly`] is the fully expanded intermediate used by multiplication
//! and by the shuffle summation.

mod hilbert;
mod multi;
mod shuffle;
mod sym;

pub use hilbert::hilbert_series_sym;
pub use multi::MultiPoly;
pub use shuffle::shuffle_sum_with_kernel;
pub use sym::{OrbitKey, SymPoly};

use serde::{Deserialize, Serialize};

use crate::error::{CohaError, Result};

/// Per-vertex variable counts `(γ^i)`, the shape of a symmetric-polynomial
/// ring. Vertices with zero variables are legal and contribute nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarLayout(Vec<usize>);

impl VarLayout {
    pub fn new(counts: Vec<usize>) -> Self {
        Self(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn num_vertices(&self) -> usize {
        self.0.len()
    }

    pub fn total_vars(&self) -> usize {
        self.0.iter().sum()
    }

    /// Offset of vertex `i`'s block in the concatenated variable vector.
    pub fn offset(&self, vertex: usize) -> usize {
        self.0[..vertex].iter().sum()
    }

    pub fn count(&self, vertex: usize) -> usize {
        self.0[vertex]
    }

    pub fn add(&self, other: &VarLayout) -> Result<VarLayout> {
        if self.0.len() != other.0.len() {
            return Err(CohaError::LayoutMismatch(format!(
                "vertex counts differ: {} vs {}",
                self.0.len(),
                other.0.len()
            )));
        }
        Ok(VarLayout(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }
}

/// Distinct permutations of a multiset of exponents, lexicographically
/// ascending. Input order does not matter.
pub(crate) fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = values.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_of_multiset() {
        let perms = distinct_permutations(&[2, 1, 1]);
        assert_eq!(perms.len(), 3);
        assert_eq!(perms[0], vec![1, 1, 2]);
        assert_eq!(perms[2], vec![2, 1, 1]);
        assert_eq!(distinct_permutations(&[]).len(), 1);
        assert_eq!(distinct_permutations(&[5, 5, 5]).len(), 1);
    }
}
