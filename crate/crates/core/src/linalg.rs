//! Exact Gaussian elimination over the rationals and prime fields.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field operations with the field itself as context, so prime fields can
/// carry their modulus.
pub trait FieldOps: Clone {
    type Elem: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// The rational numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals;

impl FieldOps for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// The prime field `F_p`, elements reduced representatives in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        Self { p }
    }
}

impl FieldOps for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // p is tiny here; scan
        (1..self.p).find(|x| (x * a) % self.p == 1).unwrap()
    }
}

/// Row-major dense matrix paired with elimination routines.
pub struct GaussResult<F: FieldOps> {
    /// Row echelon form of the input.
    pub echelon: Vec<Vec<F::Elem>>,
    /// Pivot column of each echelon row.
    pub pivots: Vec<usize>,
}

pub fn row_echelon<F: FieldOps>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> GaussResult<F> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = field.inv(&rows[rank][col]);
        for c in col..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = field.mul(&factor, &rows[rank][c]);
                    rows[r][c] = field.sub(&rows[r][c], &delta);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    GaussResult { echelon: rows, pivots }
}

pub fn rank<F: FieldOps>(field: &F, rows: Vec<Vec<F::Elem>>) -> usize {
    row_echelon(field, rows).pivots.len()
}

/// Basis of the right null space `{x : M x = 0}`.
pub fn null_space<F: FieldOps>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let g = row_echelon(field, rows);
    let pivot_set: std::collections::BTreeSet<usize> = g.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (r, &pc) in g.pivots.iter().enumerate() {
            // reduced echelon: pivot rows are normalized with zeros above
            v[pc] = field.neg(&g.echelon[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Solve `M x = b`; returns one solution if consistent.
pub fn solve<F: FieldOps>(
    field: &F,
    rows: &[Vec<F::Elem>],
    b: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<F::Elem>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let g = row_echelon(field, std::mem::take(&mut aug));
    let mut x = vec![field.zero(); ncols];
    for (r, &pc) in g.pivots.iter().enumerate() {
        if pc == ncols {
            return None; // pivot in the constant column: inconsistent
        }
        x[pc] = g.echelon[r][ncols].clone();
    }
    Some(x)
}

/// Incremental span tracker: reduced echelon rows maintained as vectors are
/// inserted. Used for closure computations and independence tests.
pub struct Span<F: FieldOps> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: FieldOps> Span<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Self {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span; returns the residual if independent and
    /// inserts it, or `None` if `v` was already in the span.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[pc]) {
                let factor = v[pc].clone();
                for c in 0..self.ncols {
                    let delta = f.mul(&factor, &row[c]);
                    v[c] = f.sub(&v[c], &delta);
                }
            }
        }
        let Some(pc) = (0..self.ncols).find(|&c| !f.is_zero(&v[c])) else {
            return false;
        };
        let inv = f.inv(&v[pc]);
        for c in 0..self.ncols {
            v[c] = f.mul(&v[c], &inv);
        }
        // keep earlier rows reduced against the new pivot
        for row in &mut self.rows {
            if !f.is_zero(&row[pc]) {
                let factor = row[pc].clone();
                for c in 0..self.ncols {
                    let delta = f.mul(&factor, &v[c]);
                    row[c] = f.sub(&row[c], &delta);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[pc]) {
                let factor = v[pc].clone();
                for c in 0..self.ncols {
                    let delta = f.mul(&factor, &row[c]);
                    v[c] = f.sub(&v[c], &delta);
                }
            }
        }
        v.iter().all(|c| f.is_zero(c))
    }
}
