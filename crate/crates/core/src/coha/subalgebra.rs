//! Two-vertex subalgebra decompositions.
//!
//! For the quiver with one arrow `2 -> 1` the algebra contains the two
//! single-vertex exterior subalgebras (generators `ξ_i`, `η_i`) and, for
//! each of `ν_i^1 = ξ_0 η_i` and `ν_i^2 = ξ_i η_0`, an exterior subalgebra
//! in the diagonal classes. Multiplication is expected to induce graded
//! isomorphisms `H_L ⊗ H_R -> H` and `H_R ⊗ H^{(i)} ⊗ H_L -> H`; this is
//! verified per bidegree by exact rank computations.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{
    antisym_form, cohdeg, coha_mul, component_keys, euler_form, generator, CohaElement,
    DimensionVector, Quiver,
};
use crate::error::{CohaError, Result};
use crate::linalg::{Rationals, Span};

#[derive(Clone, Debug)]
pub struct SubalgebraRankRow {
    pub gamma: DimensionVector,
    pub cohdeg: i64,
    pub dim_component: usize,
    /// (domain dimension, product rank) for H_L ⊗ H_R.
    pub lr: (usize, usize),
    /// (domain dimension, product rank) for H_R ⊗ H^{(i)} ⊗ H_L, i = 1, 2.
    pub rnl: [(usize, usize); 2],
}

impl SubalgebraRankRow {
    pub fn bijective(&self) -> bool {
        let ok = |(d, r): (usize, usize)| d == self.dim_component && r == self.dim_component;
        ok(self.lr) && ok(self.rnl[0]) && ok(self.rnl[1])
    }
}

#[derive(Clone, Debug)]
pub struct SubalgebraRankReport {
    pub rows: Vec<SubalgebraRankRow>,
    pub pass: bool,
}

fn require_a2(q: &Quiver) -> Result<()> {
    let ok = q.num_vertices() == 2
        && q.arrow_count(0, 0) == 0
        && q.arrow_count(1, 1) == 0
        && q.arrow_count(0, 1) == 0
        && q.arrow_count(1, 0) == 1;
    if ok {
        Ok(())
    } else {
        Err(CohaError::BadInput(
            "subalgebra decomposition is specific to the two-vertex quiver with one arrow 2 -> 1"
                .into(),
        ))
    }
}

/// Strictly decreasing index tuples `i_1 > ... > i_len >= 0` with
/// `sum (2 i_t + 1) <= max_cohdeg`.
fn decreasing_tuples(len: u32, max_cohdeg: i64) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_first: i64, budget: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        // a decreasing tail of `remaining - 1` indices costs at least
        // 1 + 3 + ... = (remaining - 1)^2
        let tail_min = (i64::from(remaining) - 1).pow(2);
        let mut v = i64::from(remaining) - 1;
        while v <= max_first && 2 * v + 1 + tail_min <= budget {
            cur.push(v as u32);
            rec(remaining - 1, v - 1, budget - (2 * v + 1), cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    if max_cohdeg >= 0 {
        rec(len, max_cohdeg, max_cohdeg, &mut Vec::new(), &mut out);
    }
    out
}

/// Ordered product of generators indexed by a decreasing tuple.
fn tuple_product(
    gens: &dyn Fn(u32) -> CohaElement,
    unit: &CohaElement,
    tuple: &[u32],
) -> Result<CohaElement> {
    let mut acc = unit.clone();
    for &i in tuple {
        acc = coha_mul(&acc, &gens(i))?;
    }
    Ok(acc)
}

pub fn subalgebra_product_rank(
    quiver: &Arc<Quiver>,
    bound: &DimensionVector,
    window: i64,
) -> Result<SubalgebraRankReport> {
    require_a2(quiver)?;
    let unit = CohaElement::unit(quiver.clone());
    let xi = |i: u32| generator(quiver, 0, i);
    let eta = |i: u32| generator(quiver, 1, i);
    let nu1 = |i: u32| coha_mul(&xi(0), &eta(i)).expect("nu generators");
    let nu2 = |i: u32| coha_mul(&xi(i), &eta(0)).expect("nu generators");

    // cohdeg bound loose enough for every part appearing in the box windows
    let max_m: i64 = DimensionVector::box_iter(bound)
        .iter()
        .map(|g| euler_form(quiver, g, g) + window + 2 * i64::from(g.get(0)) * i64::from(g.get(1)))
        .max()
        .unwrap_or(window);

    // basis elements of each factor algebra, grouped by class
    let build = |gens: &dyn Fn(u32) -> CohaElement,
                 class_of: &dyn Fn(u32) -> DimensionVector,
                 max_len: u32|
     -> Result<BTreeMap<DimensionVector, Vec<(i64, CohaElement)>>> {
        let mut out: BTreeMap<DimensionVector, Vec<(i64, CohaElement)>> = BTreeMap::new();
        for len in 0..=max_len {
            let mut items = Vec::new();
            for tuple in decreasing_tuples(len, max_m) {
                let el = tuple_product(gens, &unit, &tuple)?;
                if el.is_zero() {
                    return Err(CohaError::InternalConsistency(
                        "ordered generator product vanished".into(),
                    ));
                }
                items.push((cohdeg(&el)?, el));
            }
            out.insert(class_of(len), items);
        }
        Ok(out)
    };

    let left = build(&xi, &|n| DimensionVector::new(vec![n, 0]), bound.get(0))?;
    let right = build(&eta, &|n| DimensionVector::new(vec![0, n]), bound.get(1))?;
    let diag_max = bound.get(0).min(bound.get(1));
    let diag = [
        build(&nu1, &|n| DimensionVector::new(vec![n, n]), diag_max)?,
        build(&nu2, &|n| DimensionVector::new(vec![n, n]), diag_max)?,
    ];

    let mut rows = Vec::new();
    for gamma in DimensionVector::box_iter(bound) {
        if gamma.is_zero() {
            continue;
        }
        let chi = euler_form(quiver, &gamma, &gamma);
        let keys = component_keys(quiver, &gamma, chi + window);
        let mut key_index: BTreeMap<i64, Vec<&crate::sympoly::OrbitKey>> = BTreeMap::new();
        for (m, k) in &keys {
            key_index.entry(*m).or_default().push(k);
        }

        let top_m = chi + window;
        // formal bidegree of a product, computable before multiplying
        let formal_deg = |parts: &[&(i64, CohaElement)]| -> i64 {
            let mut formal = 0i64;
            let mut class = DimensionVector::zero(2);
            for (m, el) in parts {
                formal += m - antisym_form(quiver, &class, el.gamma());
                class = class.add(el.gamma());
            }
            formal
        };
        let multiply = |parts: &[&(i64, CohaElement)]| -> Result<CohaElement> {
            let mut acc = unit.clone();
            for (_, el) in parts {
                acc = coha_mul(&acc, el)?;
            }
            Ok(acc)
        };

        let mut lr_products: Vec<(i64, CohaElement)> = Vec::new();
        let gl = DimensionVector::new(vec![gamma.get(0), 0]);
        let gr = DimensionVector::new(vec![0, gamma.get(1)]);
        for l in &left[&gl] {
            for r in &right[&gr] {
                let parts = [l, r];
                let formal = formal_deg(&parts);
                if formal <= top_m {
                    lr_products.push((formal, multiply(&parts)?));
                }
            }
        }

        let mut rnl_products: [Vec<(i64, CohaElement)>; 2] = [Vec::new(), Vec::new()];
        for (i, diag_basis) in diag.iter().enumerate() {
            for c in 0..=gamma.get(0).min(gamma.get(1)) {
                let gd = DimensionVector::new(vec![c, c]);
                let gl = DimensionVector::new(vec![gamma.get(0) - c, 0]);
                let gr = DimensionVector::new(vec![0, gamma.get(1) - c]);
                for r in &right[&gr] {
                    for h in &diag_basis[&gd] {
                        for l in &left[&gl] {
                            let parts = [r, h, l];
                            let formal = formal_deg(&parts);
                            if formal <= top_m {
                                rnl_products[i].push((formal, multiply(&parts)?));
                            }
                        }
                    }
                }
            }
        }

        for (m, cols) in &key_index {
            let dim = cols.len();
            let mut measure = |products: &[(i64, CohaElement)]| -> (usize, usize) {
                let mut domain = 0usize;
                let mut span = Span::new(Rationals, dim);
                for (formal, el) in products {
                    if formal != m {
                        continue;
                    }
                    domain += 1;
                    if !el.is_zero() {
                        span.insert(cols.iter().map(|k| el.poly().coeff(k)).collect());
                    }
                }
                (domain, span.dim())
            };
            rows.push(SubalgebraRankRow {
                gamma: gamma.clone(),
                cohdeg: *m,
                dim_component: dim,
                lr: measure(&lr_products),
                rnl: [measure(&rnl_products[0]), measure(&rnl_products[1])],
            });
        }
    }

    let pass = rows.iter().all(SubalgebraRankRow::bijective);
    Ok(SubalgebraRankReport { rows, pass })
}
