//! Quivers, dimension vectors, and the Euler-Ringel form.

use std::collections::BTreeSet;

use crate::error::{CohaError, Result};

/// Directed multigraph given by vertex names and arrow multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    /// `arrows[i][j]` = number of arrows from vertex `i` to vertex `j`.
    arrows: Vec<Vec<u32>>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Vec<u32>>) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(CohaError::BadInput("quiver needs at least one vertex".into()));
        }
        let unique: BTreeSet<&String> = vertices.iter().collect();
        if unique.len() != n {
            return Err(CohaError::BadInput("duplicate vertex name".into()));
        }
        if arrows.len() != n || arrows.iter().any(|row| row.len() != n) {
            return Err(CohaError::BadInput(format!(
                "arrow matrix must be {n}x{n}"
            )));
        }
        Ok(Self { vertices, arrows })
    }

    /// One vertex, `d` loops.
    pub fn loops(d: u32) -> Self {
        Self {
            vertices: vec!["1".into()],
            arrows: vec![vec![d]],
        }
    }

    /// One vertex, no arrows.
    pub fn a1() -> Self {
        Self::loops(0)
    }

    /// Two vertices `1`, `2` and one arrow `2 -> 1`.
    pub fn a2() -> Self {
        Self {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![vec![0, 0], vec![1, 0]],
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_count(&self, from: usize, to: usize) -> u32 {
        self.arrows[from][to]
    }

    pub fn arrows_matrix(&self) -> &[Vec<u32>] {
        &self.arrows
    }

    /// All arrows as `(from, to, index)` triples, one per arrow instance.
    pub fn arrow_list(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for (i, row) in self.arrows.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                for k in 0..c {
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.num_vertices();
        (0..n).all(|i| (0..n).all(|j| self.arrows[i][j] == self.arrows[j][i]))
    }
}

/// Element of the grading monoid `Γ_+ = Z_{>=0}^I`, aligned with the
/// quiver's declared vertex order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimensionVector(Vec<u32>);

impl DimensionVector {
    pub fn new(v: Vec<u32>) -> Self {
        Self(v)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// Unit vector at `vertex`.
    pub fn unit(n: usize, vertex: usize) -> Self {
        let mut v = vec![0; n];
        v[vertex] = 1;
        Self(v)
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` if any component would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Self)
    }

    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every vector `0 <= γ <= bound` componentwise, in lexicographic order.
    pub fn box_iter(bound: &Self) -> Vec<Self> {
        let mut out = vec![DimensionVector::zero(bound.len())];
        for (i, &b) in bound.0.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
            for prefix in &out {
                for c in 0..=b {
                    let mut v = prefix.clone();
                    v.0[i] = c;
                    next.push(v);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

/// Euler-Ringel form `χ(α,β) = Σ_i α_i β_i − Σ_{i,j} a_ij α_i β_j`.
pub fn euler_form(q: &Quiver, alpha: &DimensionVector, beta: &DimensionVector) -> i64 {
    let n = q.num_vertices();
    debug_assert!(alpha.len() == n && beta.len() == n);
    let mut acc: i64 = 0;
    for i in 0..n {
        acc += i64::from(alpha.get(i)) * i64::from(beta.get(i));
        for j in 0..n {
            acc -= i64::from(q.arrow_count(i, j)) * i64::from(alpha.get(i)) * i64::from(beta.get(j));
        }
    }
    acc
}

/// Skew-symmetrized Euler form `⟨α,β⟩ = χ(α,β) − χ(β,α)`; vanishes on
/// symmetric quivers.
pub fn antisym_form(q: &Quiver, alpha: &DimensionVector, beta: &DimensionVector) -> i64 {
    euler_form(q, alpha, beta) - euler_form(q, beta, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_form_examples() {
        // A1: χ((n),(m)) = nm
        let a1 = Quiver::a1();
        for n in 0..5u32 {
            for m in 0..5u32 {
                assert_eq!(
                    euler_form(&a1, &DimensionVector::new(vec![n]), &DimensionVector::new(vec![m])),
                    i64::from(n * m)
                );
            }
        }
        // d loops: χ((n),(n)) = (1-d) n^2
        for d in 0..5u32 {
            let q = Quiver::loops(d);
            for n in 0..5i64 {
                let g = DimensionVector::new(vec![n as u32]);
                assert_eq!(euler_form(&q, &g, &g), (1 - i64::from(d)) * n * n);
            }
        }
        // A2 with arrow 2 -> 1
        let a2 = Quiver::a2();
        let e1 = DimensionVector::unit(2, 0);
        let e2 = DimensionVector::unit(2, 1);
        assert_eq!(euler_form(&a2, &e2, &e1), -1);
        assert_eq!(euler_form(&a2, &e1, &e2), 0);
    }

    #[test]
    fn antisym_form_properties() {
        let a2 = Quiver::a2();
        let e1 = DimensionVector::unit(2, 0);
        let e2 = DimensionVector::unit(2, 1);
        assert_eq!(antisym_form(&a2, &e1, &e2), 1);
        // bilinearity spot check
        let s = e1.add(&e1);
        assert_eq!(
            antisym_form(&a2, &s, &e2),
            antisym_form(&a2, &e1, &e2) * 2
        );
        // symmetric quivers: identically zero
        for d in 0..4 {
            let q = Quiver::loops(d);
            let a = DimensionVector::new(vec![3]);
            let b = DimensionVector::new(vec![2]);
            assert_eq!(antisym_form(&q, &a, &b), 0);
        }
    }

    #[test]
    fn quiver_validation() {
        assert!(Quiver::new(vec!["v".into(), "v".into()], vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(Quiver::new(vec!["a".into()], vec![vec![0, 0]]).is_err());
        assert!(Quiver::a2().vertex_index("2") == Some(1));
        assert!(!Quiver::a2().is_symmetric());
        assert!(Quiver::loops(3).is_symmetric());
    }

    #[test]
    fn box_enumeration() {
        let all = DimensionVector::box_iter(&DimensionVector::new(vec![2, 1]));
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], DimensionVector::zero(2));
        assert_eq!(all[5], DimensionVector::new(vec![2, 1]));
    }
}
