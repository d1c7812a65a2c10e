//! Point counts of stable framed representations over prime fields.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;

use super::{
    capacity_limit, is_stable_framed, CentralCharge, FieldSpec, FramedRep, Matrix, QuiverRep,
};
use crate::coha::{euler_form, DimensionVector, Quiver};
use crate::error::{CohaError, Result};
use crate::qarith::rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    /// Number of stable framed representations over `F_p`.
    pub raw: u64,
    /// `raw / |G_γ(F_p)|`; the division being exact is the freeness of the
    /// group action on stable framed points.
    pub orbit: u64,
    pub group_order: u128,
}

/// `|G_γ(F_p)| = prod_i |GL(γ_i, F_p)|`.
pub fn group_order(gamma: &DimensionVector, p: u64) -> u128 {
    let mut acc: u128 = 1;
    for &n in gamma.components() {
        let pn = (p as u128).pow(n);
        for j in 0..n {
            acc *= pn - (p as u128).pow(j);
        }
    }
    acc
}

/// Expected moduli dimension `Σ_i d_i γ_i − χ(γ,γ)`; negative values signal
/// emptiness in practice.
pub fn moduli_dimension(q: &Quiver, framing: &[u32], gamma: &DimensionVector) -> i64 {
    let pairing: i64 = framing
        .iter()
        .zip(gamma.components())
        .map(|(&d, &g)| i64::from(d) * i64::from(g))
        .sum();
    pairing - euler_form(q, gamma, gamma)
}

/// Small reduced-echelon span over `F_p` with reusable storage.
struct FastSpan {
    p: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl FastSpan {
    fn new(p: u64, n: usize) -> Self {
        Self {
            p,
            n,
            rows: Vec::with_capacity(n),
            pivots: Vec::with_capacity(n),
        }
    }

    fn clear(&mut self) {
        self.rows.clear();
        self.pivots.clear();
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn inv(&self, a: u64) -> u64 {
        (1..self.p).find(|x| (x * a) % self.p == 1).unwrap()
    }

    /// Insert a vector; true if it enlarged the span.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc] != 0 {
                let factor = v[pc];
                for c in 0..self.n {
                    v[c] = (v[c] + (self.p - factor % self.p) * row[c]) % self.p;
                }
            }
        }
        let Some(pc) = (0..self.n).find(|&c| v[c] != 0) else {
            return false;
        };
        let inv = self.inv(v[pc]);
        for c in 0..self.n {
            v[c] = v[c] * inv % self.p;
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }
}

struct Layout {
    /// (arrow source, arrow target, offset into the digit buffer)
    arrows: Vec<(usize, usize, usize)>,
    /// per-vertex framing map offset
    framing: Vec<usize>,
    total: usize,
}

fn layout(q: &Quiver, framing: &[u32], gamma: &DimensionVector) -> Layout {
    let mut offset = 0usize;
    let mut arrows = Vec::new();
    for (src, tgt, _) in q.arrow_list() {
        arrows.push((src, tgt, offset));
        offset += (gamma.get(tgt) * gamma.get(src)) as usize;
    }
    let mut fr = Vec::new();
    for v in 0..q.num_vertices() {
        fr.push(offset);
        offset += (gamma.get(v) * framing[v]) as usize;
    }
    Layout {
        arrows,
        framing: fr,
        total: offset,
    }
}

/// Count stable framed representations by exhaustive enumeration.
pub fn count_stable_framed(
    q: &Arc<Quiver>,
    framing: &[u32],
    gamma: &DimensionVector,
    p: u64,
    z: &CentralCharge,
) -> Result<CountResult> {
    FieldSpec::prime(p)?;
    if framing.len() != q.num_vertices() || gamma.len() != q.num_vertices() {
        return Err(CohaError::BadInput(
            "framing or dimension vector does not match quiver".into(),
        ));
    }
    let lay = layout(q, framing, gamma);
    let candidates = (p as u128).checked_pow(lay.total as u32);
    let budget = capacity_limit() as u128;
    match candidates {
        Some(c) if c <= budget => {}
        _ => {
            return Err(CohaError::Capacity(format!(
                "p^{} framed representations exceed the enumeration budget",
                lay.total
            )));
        }
    }
    let candidates = candidates.unwrap() as u64;

    let degenerate = z.is_degenerate();
    if !degenerate {
        // every candidate pays a subrepresentation enumeration
        let mut sub_estimate: u128 = 1;
        for v in 0..q.num_vertices() {
            let n = gamma.get(v) as i64;
            let c: i64 = (0..=n)
                .map(|k| {
                    i64::try_from(crate::qarith::qbinom(n, k).eval(&rat(p as i64)).to_integer())
                        .unwrap_or(i64::MAX)
                })
                .sum();
            sub_estimate = sub_estimate.saturating_mul(c as u128);
        }
        if (candidates as u128).saturating_mul(sub_estimate) > budget {
            return Err(CohaError::Capacity(
                "non-degenerate stability count exceeds the enumeration budget".into(),
            ));
        }
    }

    let nv = q.num_vertices();
    let dims: Vec<usize> = gamma.components().iter().map(|&g| g as usize).collect();
    let total_dim: usize = dims.iter().sum();
    let mut digits = vec![0u64; lay.total];
    let mut spans: Vec<FastSpan> = (0..nv).map(|v| FastSpan::new(p, dims[v])).collect();
    let mut raw = 0u64;

    let mut queue: Vec<(usize, Vec<u64>)> = Vec::new();
    for _ in 0..candidates {
        let stable = if degenerate {
            // framing generates under the arrow action
            for s in spans.iter_mut() {
                s.clear();
            }
            queue.clear();
            for v in 0..nv {
                let d = framing[v] as usize;
                for c in 0..d {
                    let vec: Vec<u64> = (0..dims[v])
                        .map(|r| digits[lay.framing[v] + r * d + c])
                        .collect();
                    queue.push((v, vec));
                }
            }
            let mut reached = 0usize;
            while let Some((v, vec)) = queue.pop() {
                if dims[v] == 0 || !spans[v].insert(vec.clone()) {
                    continue;
                }
                reached += 1;
                for &(src, tgt, off) in &lay.arrows {
                    if src != v || dims[tgt] == 0 {
                        continue;
                    }
                    let image: Vec<u64> = (0..dims[tgt])
                        .map(|r| {
                            let mut acc = 0u64;
                            for (k, x) in vec.iter().enumerate() {
                                acc = (acc + digits[off + r * dims[src] + k] * x) % p;
                            }
                            acc
                        })
                        .collect();
                    queue.push((tgt, image));
                }
            }
            reached == total_dim
        } else {
            let fr = framed_from_digits(q, framing, gamma, p, &lay, &digits)?;
            is_stable_framed(&fr, z)?
        };
        if stable {
            raw += 1;
        }
        // odometer
        let mut pos = 0usize;
        while pos < lay.total {
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }

    let order = group_order(gamma, p);
    if (raw as u128) % order != 0 {
        return Err(CohaError::InvariantViolation(format!(
            "stable count {raw} is not divisible by |G| = {order}"
        )));
    }
    Ok(CountResult {
        raw,
        orbit: (raw as u128 / order) as u64,
        group_order: order,
    })
}

fn framed_from_digits(
    q: &Arc<Quiver>,
    framing: &[u32],
    gamma: &DimensionVector,
    p: u64,
    lay: &Layout,
    digits: &[u64],
) -> Result<FramedRep> {
    let int = |d: u64| BigRational::from_integer(d.into());
    let mut mats = BTreeMap::new();
    for (arrow, &(src, tgt, off)) in q.arrow_list().iter().zip(&lay.arrows) {
        let rows = gamma.get(tgt) as usize;
        let cols = gamma.get(src) as usize;
        let mut m = Matrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, int(digits[off + r * cols + c]));
            }
        }
        mats.insert(*arrow, m);
    }
    let base = QuiverRep::new(q.clone(), FieldSpec::Prime(p), gamma.clone(), mats)?;
    let maps = (0..q.num_vertices())
        .map(|v| {
            let rows = gamma.get(v) as usize;
            let cols = framing[v] as usize;
            let mut m = Matrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, int(digits[lay.framing[v] + r * cols + c]));
                }
            }
            m
        })
        .collect();
    FramedRep::new(base, framing.to_vec(), maps)
}

/// Exhaustive stabilizer check: is the stabilizer of a stable framed point
/// inside `G_γ(F_p)` trivial? Only feasible for small groups.
pub fn stabilizer_is_trivial(fr: &FramedRep, p: u64) -> Result<bool> {
    let rep = fr.base();
    let order = group_order(rep.gamma(), p);
    if order > 200_000 {
        return Err(CohaError::Capacity(format!(
            "group of order {order} too large for exhaustive stabilizer check"
        )));
    }
    let nv = rep.quiver().num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| rep.dim_at(v)).collect();
    let to_fp = |r: &BigRational| super::rational_to_fp(r, p);
    // all invertible matrices per vertex
    let mut gls: Vec<Vec<Vec<u64>>> = Vec::new();
    for &n in &dims {
        let mut list = Vec::new();
        let total = (p as usize).pow((n * n) as u32);
        for mut idx in 0..total {
            let mut m = vec![0u64; n * n];
            for e in m.iter_mut() {
                *e = (idx % p as usize) as u64;
                idx /= p as usize;
            }
            let mut span = FastSpan::new(p, n);
            let full = (0..n).all(|r| span.insert(m[r * n..(r + 1) * n].to_vec()));
            if full {
                list.push(m);
            }
        }
        gls.push(list);
    }
    let mats: BTreeMap<_, Vec<u64>> = rep
        .mats()
        .map(|(id, m)| {
            let flat: Result<Vec<u64>> = (0..m.rows)
                .flat_map(|r| m.row(r).iter().map(to_fp))
                .collect();
            Ok((*id, flat?))
        })
        .collect::<Result<_>>()?;
    let frs: Vec<Vec<u64>> = fr
        .framing_maps()
        .iter()
        .map(|m| {
            (0..m.rows)
                .flat_map(|r| m.row(r).iter().map(to_fp))
                .collect::<Result<Vec<u64>>>()
        })
        .collect::<Result<_>>()?;

    let matmul = |a: &[u64], b: &[u64], n: usize, m: usize, k: usize| -> Vec<u64> {
        // (n x m) * (m x k)
        let mut out = vec![0u64; n * k];
        for r in 0..n {
            for c in 0..k {
                let mut acc = 0u64;
                for t in 0..m {
                    acc = (acc + a[r * m + t] * b[t * k + c]) % p;
                }
                out[r * k + c] = acc;
            }
        }
        out
    };

    let mut fixing = 0u64;
    let mut choice = vec![0usize; nv];
    'outer: loop {
        let g: Vec<&Vec<u64>> = (0..nv).map(|v| &gls[v][choice[v]]).collect();
        // g fixes the framed point iff g_tgt M_a = M_a g_src and g_v f_v = f_v
        let mut fixes = true;
        for (id, m) in &mats {
            let (src, tgt, _) = *id;
            let lhs = matmul(g[tgt], m, dims[tgt], dims[tgt], dims[src]);
            let rhs = matmul(m, g[src], dims[tgt], dims[src], dims[src]);
            if lhs != rhs {
                fixes = false;
                break;
            }
        }
        if fixes {
            for v in 0..nv {
                let d = fr.framing_dims()[v] as usize;
                let lhs = matmul(g[v], &frs[v], dims[v], dims[v], d);
                if lhs != frs[v] {
                    fixes = false;
                    break;
                }
            }
        }
        if fixes {
            fixing += 1;
            if fixing > 1 {
                return Ok(false);
            }
        }
        let mut v = 0;
        loop {
            if v == nv {
                break 'outer;
            }
            choice[v] += 1;
            if choice[v] < gls[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
    Ok(fixing == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qbinom;

    #[test]
    fn grassmannian_count() {
        // stable framed points of the arrowless quiver = surjections, and
        // orbits = subspaces: qbinom(4,2) at p=2 is 35
        let q = Arc::new(Quiver::a1());
        let z = CentralCharge::trivial(1);
        let r = count_stable_framed(&q, &[4], &DimensionVector::new(vec![2]), 2, &z).unwrap();
        assert_eq!(r.orbit, 35);
        assert_eq!(r.raw, 210); // (16-1)(16-2) full-rank 2x4 matrices
        let expect = qbinom(4, 2).eval(&rat(2));
        assert_eq!(rat(r.orbit as i64), expect);
    }

    #[test]
    fn no_surjection_means_zero() {
        let q = Arc::new(Quiver::a1());
        let z = CentralCharge::trivial(1);
        let r = count_stable_framed(&q, &[1], &DimensionVector::new(vec![2]), 2, &z).unwrap();
        assert_eq!(r.raw, 0);
        assert_eq!(r.orbit, 0);
    }

    #[test]
    fn moduli_dimension_examples() {
        let a1 = Quiver::a1();
        assert_eq!(moduli_dimension(&a1, &[4], &DimensionVector::new(vec![2])), 4);
        let q2 = Quiver::loops(2);
        assert_eq!(moduli_dimension(&q2, &[1], &DimensionVector::new(vec![2])), 6);
        assert_eq!(moduli_dimension(&q2, &[1], &DimensionVector::new(vec![0])), 0);
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(&DimensionVector::new(vec![2]), 2), 6);
        assert_eq!(group_order(&DimensionVector::new(vec![2]), 3), 48);
        assert_eq!(group_order(&DimensionVector::new(vec![1, 1]), 3), 4);
        assert_eq!(group_order(&DimensionVector::new(vec![0]), 5), 1);
    }

    #[test]
    fn q2_hilbert_scheme_baseline() {
        // independent oracle: enumerate (A, B, v) directly and test
        // cyclicity by brute word application
        let p = 2u64;
        let mut cyclic = 0u64;
        let dim = 2usize;
        let total = (p as usize).pow((dim * dim * 2 + dim) as u32);
        for mut idx in 0..total {
            let mut digits = vec![0u64; dim * dim * 2 + dim];
            for d in digits.iter_mut() {
                *d = (idx % p as usize) as u64;
                idx /= p as usize;
            }
            let (a, rest) = digits.split_at(dim * dim);
            let (b, v) = rest.split_at(dim * dim);
            // words of length <= 2 applied to v
            let app = |m: &[u64], x: &[u64]| -> Vec<u64> {
                (0..dim)
                    .map(|r| {
                        (0..dim).map(|c| m[r * dim + c] * x[c]).sum::<u64>() % p
                    })
                    .collect()
            };
            let mut vs = vec![v.to_vec()];
            for w in [a, b] {
                vs.push(app(w, v));
            }
            for w1 in [a, b] {
                for w2 in [a, b] {
                    vs.push(app(w1, &app(w2, v)));
                }
            }
            let mut span = FastSpan::new(p, dim);
            for x in vs {
                span.insert(x);
            }
            if span.dim() == dim {
                cyclic += 1;
            }
        }
        let q = Arc::new(Quiver::loops(2));
        let z = CentralCharge::trivial(1);
        let r = count_stable_framed(&q, &[1], &DimensionVector::new(vec![2]), p, &z).unwrap();
        assert_eq!(r.raw, cyclic);
        assert_eq!(r.orbit as u128, cyclic as u128 / r.group_order);
    }

    #[test]
    fn stabilizers_of_stable_points_are_trivial() {
        let q = Arc::new(Quiver::a1());
        let gamma = DimensionVector::new(vec![2]);
        let base = QuiverRep::zero_rep(q, FieldSpec::Prime(2), gamma);
        let maps = vec![Matrix::from_rows(vec![
            vec![rat(1), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(1)],
        ])
        .unwrap()];
        let fr = FramedRep::new(base, vec![3], maps).unwrap();
        assert!(is_stable_framed(&fr, &CentralCharge::trivial(1)).unwrap());
        assert!(stabilizer_is_trivial(&fr, 2).unwrap());
    }
}
