//! Free-supercommutativity check for symmetric quivers.
//!
//! For every class in the box the decomposable subspace (span of all
//! products of lower pieces) is computed by explicit multiplication of
//! basis pairs; generator dimensions are the codimensions. The verdict
//! reconstructs the dimension series of a free supercommutative algebra on
//! the extracted generators (parity = cohomological degree mod 2) and
//! compares it against the component series inside the requested window.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{
    cohdeg, coha_mul, component_basis, component_keys, euler_form, series::series_counts,
    component_series, DimensionVector, Quiver,
};
use crate::error::{CohaError, Result};
use crate::linalg::{Rationals, Span};

#[derive(Clone, Debug)]
pub struct FreenessReport {
    /// Cohomological window width checked above each `χ(γ,γ)`.
    pub window: i64,
    /// Generator dimensions per (class, cohomological degree); only nonzero
    /// entries are listed. Includes degrees above the per-class window when
    /// they can contribute to products inside the box.
    pub generators: BTreeMap<(DimensionVector, i64), usize>,
    pub pass: bool,
    /// Human-readable mismatch diagnostics; empty iff `pass`.
    pub mismatches: Vec<String>,
}

/// Binomial coefficient as i64 (arguments stay tiny here).
fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

pub fn freeness_report(
    quiver: &Arc<Quiver>,
    bound: &DimensionVector,
    window: i64,
) -> Result<FreenessReport> {
    if !quiver.is_symmetric() {
        return Err(CohaError::BadInput(
            "freeness check is stated for symmetric quivers only".into(),
        ));
    }
    let classes: Vec<DimensionVector> = DimensionVector::box_iter(bound)
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();

    // Minimal total cohomological degree of any product decomposition of a
    // class: min over splits of the sum of χ on the parts.
    let mut minchi: BTreeMap<DimensionVector, i64> = BTreeMap::new();
    for g in &classes {
        let mut best = euler_form(quiver, g, g);
        for g1 in &classes {
            if g1.le(g) && *g1 != *g {
                if let Some(g2) = g.checked_sub(g1) {
                    if !g2.is_zero() {
                        if let (Some(a), Some(b)) = (minchi.get(g1), minchi.get(&g2)) {
                            best = best.min(a + b);
                        }
                    }
                }
            }
        }
        minchi.insert(g.clone(), best);
    }

    // Degree up to which each class's generators can matter inside the box.
    let mut top: BTreeMap<DimensionVector, i64> = BTreeMap::new();
    for d in &classes {
        let mut t = i64::MIN;
        for g in &classes {
            if !d.le(g) {
                continue;
            }
            let rest = g.checked_sub(d).unwrap();
            let slack = if rest.is_zero() { 0 } else { minchi[&rest] };
            t = t.max(euler_form(quiver, g, g) + window - slack);
        }
        top.insert(d.clone(), t);
    }

    // Bases and decomposable spans per class.
    let mut gens: BTreeMap<(DimensionVector, i64), usize> = BTreeMap::new();
    let mut bases: BTreeMap<DimensionVector, Vec<(i64, super::CohaElement)>> = BTreeMap::new();
    for g in &classes {
        let basis = component_basis(quiver, g, top[g]);
        let tagged: Vec<(i64, super::CohaElement)> = basis
            .into_iter()
            .map(|b| (cohdeg(&b).expect("basis elements are homogeneous"), b))
            .collect();
        bases.insert(g.clone(), tagged);
    }
    for g in &classes {
        let keys = component_keys(quiver, g, top[g]);
        let mut key_index: BTreeMap<i64, Vec<&crate::sympoly::OrbitKey>> = BTreeMap::new();
        for (m, k) in &keys {
            key_index.entry(*m).or_default().push(k);
        }
        let mut spans: BTreeMap<i64, Span<Rationals>> = BTreeMap::new();
        for g1 in &classes {
            if !g1.le(g) || *g1 == *g {
                continue;
            }
            let g2 = g.checked_sub(g1).unwrap();
            if g2.is_zero() {
                continue;
            }
            for (m1, b1) in &bases[g1] {
                for (m2, b2) in &bases[&g2] {
                    let m = m1 + m2; // symmetric quiver: grading is additive
                    if m > top[g] {
                        continue;
                    }
                    let prod = coha_mul(b1, b2)?;
                    if prod.is_zero() {
                        continue;
                    }
                    let cols = key_index
                        .get(&m)
                        .expect("product degree within enumerated keys");
                    let vec: Vec<_> = cols.iter().map(|k| prod.poly().coeff(k)).collect();
                    spans
                        .entry(m)
                        .or_insert_with(|| Span::new(Rationals, cols.len()))
                        .insert(vec);
                }
            }
        }
        for (m, ks) in &key_index {
            let dim = ks.len();
            let dec = spans.get(m).map_or(0, |s| s.dim());
            if dim > dec {
                gens.insert((g.clone(), *m), dim - dec);
            }
            debug_assert!(dec <= dim);
        }
    }

    // Dimension series of the free supercommutative algebra on the
    // extracted generators, truncated per class at `top`.
    let zero = DimensionVector::zero(bound.len());
    let mut counts: BTreeMap<DimensionVector, BTreeMap<i64, i64>> = BTreeMap::new();
    counts.insert(zero.clone(), BTreeMap::from([(0i64, 1i64)]));
    for g in &classes {
        counts.insert(g.clone(), BTreeMap::new());
    }
    for ((d, m), gdim) in &gens {
        let m = *m;
        let g = *gdim as i64;
        let odd = m.rem_euclid(2) == 1;
        let mut next: BTreeMap<DimensionVector, BTreeMap<i64, i64>> = BTreeMap::new();
        for (cls, table) in &counts {
            for (deg, cnt) in table {
                // t copies of a generator from this slot
                let mut t = 0i64;
                loop {
                    let ways = if odd { binom(g, t) } else { binom(g + t - 1, t) };
                    if ways == 0 {
                        break;
                    }
                    let mut target = cls.clone();
                    let mut ok = true;
                    for _ in 0..t {
                        target = target.add(d);
                        if !target.le(bound) {
                            ok = false;
                            break;
                        }
                    }
                    if !ok {
                        break;
                    }
                    let ndeg = deg + t * m;
                    let keep = target.is_zero() || ndeg <= *top.get(&target).unwrap_or(&i64::MIN);
                    if keep {
                        *next.entry(target).or_default().entry(ndeg).or_insert(0) += cnt * ways;
                    }
                    t += 1;
                }
            }
        }
        counts = next;
    }

    // Compare against the component series inside each class window.
    let mut mismatches = Vec::new();
    for g in &classes {
        let chi = euler_form(quiver, g, g);
        let expect = series_counts(&component_series(quiver, g, chi + window)?);
        let got = counts.get(g).cloned().unwrap_or_default();
        for m in chi..=chi + window {
            let e = expect.get(&m).copied().unwrap_or(0);
            let o = got.get(&m).copied().unwrap_or(0);
            if e != o {
                mismatches.push(format!(
                    "class {:?} cohdeg {m}: free algebra gives {o}, component has {e}",
                    g.components()
                ));
            }
        }
    }

    Ok(FreenessReport {
        window,
        generators: gens,
        pass: mismatches.is_empty(),
        mismatches,
    })
}
