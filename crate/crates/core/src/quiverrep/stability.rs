//! Framing and the framed-stability decision.

use std::cmp::Ordering;

use num_rational::BigRational;

use super::rep::convert_mats;
use super::{arg_less, capacity_limit, CentralCharge, FieldSpec, Matrix, QuiverRep};
use crate::coha::{DimensionVector, Quiver};
use crate::error::{CohaError, Result};
use crate::linalg::{FieldOps, PrimeField, Span};
use crate::qarith::qbinom;
use crate::qarith::rat;

/// Extended quiver: a fresh framing vertex `i0` (appended after the
/// original vertices) with `d_i` arrows `i0 -> i`.
pub fn extend_quiver(q: &Quiver, framing: &[u32]) -> Result<Quiver> {
    if framing.len() != q.num_vertices() {
        return Err(CohaError::BadInput(
            "framing dimension list does not match quiver".into(),
        ));
    }
    if framing.iter().all(|&d| d == 0) {
        return Err(CohaError::BadInput("framing must not be identically zero".into()));
    }
    let mut names: Vec<String> = q.vertex_names().to_vec();
    let mut fresh = "i0".to_string();
    while names.contains(&fresh) {
        fresh.push('\'');
    }
    names.push(fresh);
    let n = q.num_vertices();
    let mut arrows = vec![vec![0u32; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            arrows[i][j] = q.arrow_count(i, j);
        }
        arrows[n][i] = framing[i];
    }
    Quiver::new(names, arrows)
}

/// Representation with framing maps `W_i -> E_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct FramedRep {
    base: QuiverRep,
    framing_dims: Vec<u32>,
    /// Per vertex, a `γ^i x d_i` matrix.
    framing_maps: Vec<Matrix>,
}

impl FramedRep {
    pub fn new(base: QuiverRep, framing_dims: Vec<u32>, framing_maps: Vec<Matrix>) -> Result<Self> {
        let nv = base.quiver().num_vertices();
        if framing_dims.len() != nv || framing_maps.len() != nv {
            return Err(CohaError::BadInput(
                "framing data does not match the vertex count".into(),
            ));
        }
        for v in 0..nv {
            let m = &framing_maps[v];
            if (m.rows, m.cols) != (base.dim_at(v), framing_dims[v] as usize) {
                return Err(CohaError::BadInput(format!(
                    "framing map at vertex {v} is {}x{}, expected {}x{}",
                    m.rows,
                    m.cols,
                    base.dim_at(v),
                    framing_dims[v]
                )));
            }
        }
        Ok(Self {
            base,
            framing_dims,
            framing_maps,
        })
    }

    pub fn base(&self) -> &QuiverRep {
        &self.base
    }

    pub fn framing_dims(&self) -> &[u32] {
        &self.framing_dims
    }

    pub fn framing_maps(&self) -> &[Matrix] {
        &self.framing_maps
    }

    /// Framing image columns as `(vertex, vector)` seeds.
    pub fn framing_seeds(&self) -> Vec<(usize, Vec<BigRational>)> {
        let mut seeds = Vec::new();
        for (v, m) in self.framing_maps.iter().enumerate() {
            for c in 0..m.cols {
                seeds.push((v, (0..m.rows).map(|r| m.get(r, c).clone()).collect()));
            }
        }
        seeds
    }
}

/// All subspaces of `F_p^n` as reduced row-echelon bases (including the
/// zero and full subspaces).
pub fn subspaces_fp(p: u64, n: usize) -> Vec<Vec<Vec<u64>>> {
    use itertools::Itertools;
    let f = PrimeField::new(p);
    let mut out = vec![Vec::new()];
    for k in 1..=n {
        for pivots in (0..n).combinations(k) {
            // free entries: row i, column c > pivots[i], c not a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| {
                    let pivots = pivots.clone();
                    (pivots[i] + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (i, c))
                })
                .collect();
            let total = (p as usize).pow(free.len() as u32);
            for mut idx in 0..total {
                let mut rows = vec![vec![0u64; n]; k];
                for (i, &pc) in pivots.iter().enumerate() {
                    rows[i][pc] = f.one();
                }
                for &(r, c) in &free {
                    rows[r][c] = (idx % p as usize) as u64;
                    idx /= p as usize;
                }
                out.push(rows);
            }
        }
    }
    out
}

fn fp_convert(p: u64) -> impl Fn(&BigRational) -> Result<u64> {
    move |r| super::rational_to_fp(r, p)
}

/// Is the span of `rows` (echelon basis) closed under every arrow and does
/// it contain the given vectors?
fn tuple_closed_under_arrows(
    f: &PrimeField,
    rep: &QuiverRep,
    mats: &std::collections::BTreeMap<super::ArrowId, Vec<Vec<u64>>>,
    tuple: &[Vec<Vec<u64>>],
) -> bool {
    for arrow in rep.quiver().arrow_list() {
        let (src, tgt, _) = arrow;
        if tuple[src].is_empty() {
            continue;
        }
        let mut tgt_span = Span::new(f.clone(), rep.dim_at(tgt));
        for row in &tuple[tgt] {
            tgt_span.insert(row.clone());
        }
        let ma = &mats[&arrow];
        for u in &tuple[src] {
            let image: Vec<u64> = (0..rep.dim_at(tgt))
                .map(|r| {
                    let mut acc = 0u64;
                    for (c, x) in u.iter().enumerate() {
                        acc = f.add(&acc, &f.mul(&ma[r][c], x));
                    }
                    acc
                })
                .collect();
            if !tgt_span.contains(&image) {
                return false;
            }
        }
    }
    true
}

/// Every subrepresentation of a finite-field representation, as per-vertex
/// echelon bases of arrow-invariant subspace tuples.
pub(crate) fn enumerate_subreps(rep: &QuiverRep) -> Result<Vec<Vec<Vec<Vec<u64>>>>> {
    let FieldSpec::Prime(p) = rep.field() else {
        return Err(CohaError::Capacity(
            "subrepresentation enumeration requires a finite field".into(),
        ));
    };
    let f = PrimeField::new(p);
    let nv = rep.quiver().num_vertices();
    // capacity estimate: product of subspace counts
    let mut estimate = 1u64;
    for v in 0..nv {
        let n = rep.dim_at(v) as i64;
        let count: i64 = (0..=n)
            .map(|k| {
                let c = qbinom(n, k).eval(&rat(p as i64));
                i64::try_from(c.to_integer()).unwrap_or(i64::MAX)
            })
            .sum();
        estimate = estimate.saturating_mul(count as u64);
    }
    if estimate > capacity_limit() {
        return Err(CohaError::Capacity(format!(
            "{estimate} candidate subspace tuples exceed the enumeration budget"
        )));
    }
    let mats = convert_mats(rep, &fp_convert(p))?;
    let per_vertex: Vec<Vec<Vec<Vec<u64>>>> =
        (0..nv).map(|v| subspaces_fp(p, rep.dim_at(v))).collect();
    let mut tuples: Vec<Vec<Vec<Vec<u64>>>> = vec![Vec::new()];
    for v in 0..nv {
        let mut next = Vec::with_capacity(tuples.len() * per_vertex[v].len());
        for t in &tuples {
            for s in &per_vertex[v] {
                let mut nt = t.clone();
                nt.push(s.clone());
                next.push(nt);
            }
        }
        tuples = next;
    }
    Ok(tuples
        .into_iter()
        .filter(|t| tuple_closed_under_arrows(&f, rep, &mats, t))
        .collect())
}

fn contains_framing_images(f: &PrimeField, fr: &FramedRep, tuple: &[Vec<Vec<u64>>]) -> Result<bool> {
    for (v, seed) in fr.framing_seeds() {
        let vec: Vec<u64> = seed
            .iter()
            .map(|r| super::rational_to_fp(r, f.p))
            .collect::<Result<_>>()?;
        let mut span = Span::new(f.clone(), vec.len());
        for row in &tuple[v] {
            span.insert(row.clone());
        }
        if !span.contains(&vec) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Framed stability.
///
/// The base must be semistable (no subrepresentation of strictly bigger
/// argument) and no proper subrepresentation containing all framing images
/// may have argument `>=` that of the whole. The non-strict comparison
/// makes the degenerate charge reduce exactly to "the framing generates".
///
/// Degenerate charges are decided by the generation check over any field;
/// otherwise the decision enumerates subrepresentations over `F_p`.
pub fn is_stable_framed(fr: &FramedRep, z: &CentralCharge) -> Result<bool> {
    let rep = fr.base();
    if z.num_vertices() != rep.quiver().num_vertices() {
        return Err(CohaError::BadInput(
            "central charge does not match the quiver".into(),
        ));
    }
    if rep.gamma().is_zero() {
        // no proper subobjects at all
        return Ok(true);
    }
    if z.is_degenerate() {
        return super::rep::vectors_generate(rep, &fr.framing_seeds());
    }
    let FieldSpec::Prime(p) = rep.field() else {
        return Err(CohaError::Capacity(
            "non-degenerate stability over Q is undecided; use a finite field".into(),
        ));
    };
    let f = PrimeField::new(p);
    let gamma = rep.gamma().clone();
    for tuple in enumerate_subreps(rep)? {
        let dims = DimensionVector::new(tuple.iter().map(|b| b.len() as u32).collect());
        if dims.is_zero() {
            // the zero subrepresentation destabilizes iff the framing is zero
            if contains_framing_images(&f, fr, &tuple)? {
                return Ok(false);
            }
            continue;
        }
        if dims == gamma {
            continue;
        }
        match arg_less(z, &gamma, &dims)? {
            Ordering::Less => return Ok(false), // strictly bigger argument: not semistable
            Ordering::Equal => {
                if contains_framing_images(&f, fr, &tuple)? {
                    return Ok(false);
                }
            }
            Ordering::Greater => {}
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    fn framed_a1(maps: Vec<Vec<BigRational>>, d: u32, field: FieldSpec) -> FramedRep {
        let q = Arc::new(Quiver::a1());
        let gamma = DimensionVector::new(vec![maps.len() as u32]);
        let base = QuiverRep::zero_rep(q, field, gamma);
        FramedRep::new(base, vec![d], vec![Matrix::from_rows(maps).unwrap()]).unwrap()
    }

    #[test]
    fn extend_quiver_examples() {
        let ext = extend_quiver(&Quiver::a1(), &[1]).unwrap();
        assert_eq!(ext.num_vertices(), 2);
        assert_eq!(ext.arrow_count(1, 0), 1);
        let ext = extend_quiver(&Quiver::loops(2), &[1]).unwrap();
        assert_eq!(ext.arrow_count(0, 0), 2);
        assert_eq!(ext.arrow_count(1, 0), 1);
        let ext = extend_quiver(&Quiver::a2(), &[1, 0]).unwrap();
        assert_eq!(ext.num_vertices(), 3);
        assert_eq!(ext.arrow_count(1, 0), 1);
        assert_eq!(ext.arrow_count(2, 0), 1);
        assert_eq!(ext.arrow_count(2, 1), 0);
        assert!(extend_quiver(&Quiver::a1(), &[0]).is_err());
    }

    #[test]
    fn subspace_enumeration_counts() {
        // F_2^2: 0, three lines, plane
        assert_eq!(subspaces_fp(2, 2).len(), 5);
        // F_3^2: 0, four lines, plane
        assert_eq!(subspaces_fp(3, 2).len(), 6);
        assert_eq!(subspaces_fp(2, 3).len(), 16);
    }

    #[test]
    fn surjective_framing_is_stable() {
        let fr = framed_a1(vec![vec![rat(1), rat(0)]], 2, FieldSpec::Rational);
        let z = CentralCharge::trivial(1);
        assert!(is_stable_framed(&fr, &z).unwrap());
    }

    #[test]
    fn zero_framing_is_unstable() {
        let fr = framed_a1(vec![vec![rat(0)]], 1, FieldSpec::Prime(2));
        let z = CentralCharge::trivial(1);
        assert!(!is_stable_framed(&fr, &z).unwrap());
    }

    #[test]
    fn cyclic_pair_is_stable_noncyclic_is_not() {
        // two loops, γ=2 over F_2: (A, B, v)
        let q = Arc::new(Quiver::loops(2));
        let gamma = DimensionVector::new(vec![2]);
        let mut mats = BTreeMap::new();
        // A = [[0,0],[1,0]] shifts e1 -> e2; B = 0
        mats.insert(
            (0usize, 0usize, 0u32),
            Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]).unwrap(),
        );
        mats.insert((0, 0, 1), Matrix::zero(2, 2));
        let base = QuiverRep::new(q.clone(), FieldSpec::Prime(2), gamma.clone(), mats).unwrap();
        let v_cyclic = Matrix::from_rows(vec![vec![rat(1)], vec![rat(0)]]).unwrap();
        let fr = FramedRep::new(base.clone(), vec![1], vec![v_cyclic]).unwrap();
        assert!(is_stable_framed(&fr, &CentralCharge::trivial(1)).unwrap());
        // v = e2 is killed by both arrows' images: A e2 = 0
        let v_bad = Matrix::from_rows(vec![vec![rat(0)], vec![rat(1)]]).unwrap();
        let fr = FramedRep::new(base, vec![1], vec![v_bad]).unwrap();
        assert!(!is_stable_framed(&fr, &CentralCharge::trivial(1)).unwrap());
    }

    #[test]
    fn nondegenerate_charge_uses_enumeration() {
        // A2 nonsplit rep k <- k with framing at vertex 1 only; the
        // subrepresentation S1 contains the framing image.
        let q = Arc::new(Quiver::a2());
        let mut mats = BTreeMap::new();
        mats.insert(
            (1usize, 0usize, 0u32),
            Matrix::from_rows(vec![vec![rat(1)]]).unwrap(),
        );
        let base = QuiverRep::new(
            q.clone(),
            FieldSpec::Prime(2),
            DimensionVector::new(vec![1, 1]),
            mats,
        )
        .unwrap();
        let maps = vec![
            Matrix::from_rows(vec![vec![rat(1)]]).unwrap(),
            Matrix::zero(1, 0),
        ];
        let fr = FramedRep::new(base, vec![1, 0], maps).unwrap();
        // S1 has argument 3π/4 > π/2 = arg of γ=(1,1) under this charge:
        // base not semistable
        let z = CentralCharge::new(vec![(rat(-1), rat(1)), (rat(1), rat(1))]).unwrap();
        assert!(!is_stable_framed(&fr, &z).unwrap());
        // reversing the charge makes S1 smaller-argument; it still contains
        // the framing image but only non-strictly... strictly smaller is fine
        let z = CentralCharge::new(vec![(rat(1), rat(1)), (rat(-1), rat(1))]).unwrap();
        assert!(is_stable_framed(&fr, &z).unwrap());
        // over Q the same instance is out of reach
        let mut mats = BTreeMap::new();
        mats.insert(
            (1usize, 0usize, 0u32),
            Matrix::from_rows(vec![vec![rat(1)]]).unwrap(),
        );
        let base = QuiverRep::new(
            q,
            FieldSpec::Rational,
            DimensionVector::new(vec![1, 1]),
            mats,
        )
        .unwrap();
        let maps = vec![
            Matrix::from_rows(vec![vec![rat(1)]]).unwrap(),
            Matrix::zero(1, 0),
        ];
        let fr = FramedRep::new(base, vec![1, 0], maps).unwrap();
        assert!(matches!(
            is_stable_framed(&fr, &z),
            Err(CohaError::Capacity(_))
        ));
    }
}
