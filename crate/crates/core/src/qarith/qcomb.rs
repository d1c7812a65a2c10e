//! q-integers and Gaussian binomial coefficients.

use super::{rat, LaurentPoly};
use crate::error::{CohaError, Result};

/// Symmetric q-integer `[k]_q = (q^k - q^{-k}) / (q - q^{-1})`,
/// i.e. `q^{k-1} + q^{k-3} + ... + q^{1-k}`.
pub fn qint(k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(CohaError::BadInput(format!("qint: negative k = {k}")));
    }
    Ok(LaurentPoly::from_terms(
        (0..k).map(|j| (k - 1 - 2 * j, rat(1))),
    ))
}

/// Gaussian binomial coefficient as a polynomial in `q`.
///
/// Evaluated at a prime power `p` it counts `k`-dimensional subspaces of
/// `F_p^n`. Out-of-range `k` returns 0, matching the combinatorial
/// convention.
pub fn qbinom(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || k > n {
        return LaurentPoly::zero();
    }
    // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]; stays polynomial
    // throughout, no division needed.
    let n = n as usize;
    let k = k as usize;
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let mut entry = LaurentPoly::zero();
            if j >= 1 {
                entry = &entry + &row[j - 1];
            }
            if j < row.len() {
                entry = &entry + &row[j].shift(j as i64);
            }
            next.push(entry);
        }
        row = next;
    }
    row[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn qint_small() {
        assert!(qint(0).unwrap().is_zero());
        assert!(qint(1).unwrap().is_one());
        // [2]_q = q + q^{-1}
        assert_eq!(qint(2).unwrap(), LaurentPoly::from_terms([(1, rat(1)), (-1, rat(1))]));
        assert!(qint(-1).is_err());
    }

    #[test]
    fn qint_at_one_and_palindromic() {
        for k in 0..=50 {
            let p = qint(k).unwrap();
            assert_eq!(p.eval(&rat(1)), rat(k));
            assert_eq!(p.num_terms() as i64, k);
            // palindromy: coeff(e) == coeff(-e)
            for (e, c) in p.terms() {
                assert_eq!(p.coeff(-e), c.clone());
            }
        }
    }

    #[test]
    fn qbinom_edges_and_symmetry() {
        for n in 0..=10 {
            assert!(qbinom(n, 0).is_one());
            assert!(qbinom(n, n).is_one());
            assert!(qbinom(n, -1).is_zero());
            assert!(qbinom(n, n + 1).is_zero());
            for k in 0..=n {
                assert_eq!(qbinom(n, k), qbinom(n, n - k));
            }
        }
        assert_eq!(qbinom(2, 1), LaurentPoly::from_terms([(0, rat(1)), (1, rat(1))]));
        // [4,2]_q = 1 + q + 2q^2 + q^3 + q^4, value 35 at q=2
        let p = qbinom(4, 2);
        let expect = LaurentPoly::from_terms([
            (0, rat(1)),
            (1, rat(1)),
            (2, rat(2)),
            (3, rat(1)),
            (4, rat(1)),
        ]);
        assert_eq!(p, expect);
        assert_eq!(p.eval(&rat(2)), rat(35));
    }

    /// Exhaustive subspace enumeration over F_p, independent of the Pascal
    /// recurrence: grow subspaces one vector at a time, deduplicating by
    /// their full point sets.
    fn count_subspaces(p: u64, n: usize, k: usize) -> u64 {
        use std::collections::BTreeSet;
        type Space = BTreeSet<Vec<u64>>;
        let vectors: Vec<Vec<u64>> = (0..(p as usize).pow(n as u32))
            .map(|mut idx| {
                let mut v = vec![0u64; n];
                for slot in v.iter_mut() {
                    *slot = (idx % p as usize) as u64;
                    idx /= p as usize;
                }
                v
            })
            .collect();
        // S already a subspace, so S + span(v) closes in one pass
        let extend = |s: &Space, v: &[u64]| -> Space {
            let mut out = Space::new();
            for pt in s {
                for c in 0..p {
                    out.insert(
                        pt.iter()
                            .zip(v)
                            .map(|(a, b)| (a + c * b) % p)
                            .collect(),
                    );
                }
            }
            out
        };
        let zero_space: Space = [vec![0u64; n]].into_iter().collect();
        let mut all: BTreeSet<Space> = [zero_space.clone()].into_iter().collect();
        let mut work = vec![zero_space];
        while let Some(s) = work.pop() {
            for v in &vectors {
                if s.contains(v) {
                    continue;
                }
                let bigger = extend(&s, v);
                if all.insert(bigger.clone()) {
                    work.push(bigger);
                }
            }
        }
        let size = (p as usize).pow(k as u32);
        all.iter().filter(|s| s.len() == size).count() as u64
    }

    #[test]
    fn qbinom_counts_subspaces() {
        for &p in &[2u64, 3] {
            for n in 0..=4usize {
                for k in 0..=n {
                    let expect = count_subspaces(p, n, k);
                    let got = qbinom(n as i64, k as i64).eval(&rat(p as i64));
                    assert_eq!(
                        got,
                        BigRational::from_integer(expect.into()),
                        "p={p} n={n} k={k}"
                    );
                }
            }
        }
    }
}
