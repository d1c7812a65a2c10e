//! Shuffle summation with the Hall-algebra rational kernel.
//!
//! The product of two symmetric-group elements is the sum over all per-vertex
//! shuffles of the variable groups of
//!
//! ```text
//! f1(x') f2(x'') * prod_{i,j} prod (x''_{j,b} - x'_{i,a})^{a_ij}
//!                 / prod_{i}  prod (x''_{i,b} - x'_{i,a})
//! ```
//!
//! The sum of the rational terms is a polynomial. We accumulate every term
//! over the common denominator (the full per-vertex Vandermonde product) and
//! perform one exact division at the end; a nonzero remainder signals an
//! implementation bug, not bad input.

use itertools::Itertools;

use super::sym::canonicalize;
use super::{MultiPoly, SymPoly, VarLayout};
use crate::error::{CohaError, Result};

/// Shuffle-product of `f1` and `f2` for a quiver with arrow multiplicities
/// `arrows[i][j]` (arrows from vertex `i` to vertex `j`).
pub fn shuffle_sum_with_kernel(
    f1: &SymPoly,
    f2: &SymPoly,
    arrows: &[Vec<u32>],
) -> Result<SymPoly> {
    let nv = arrows.len();
    if f1.layout().num_vertices() != nv || f2.layout().num_vertices() != nv {
        return Err(CohaError::LayoutMismatch(format!(
            "layouts with {} and {} vertices against a quiver with {nv}",
            f1.layout().num_vertices(),
            f2.layout().num_vertices()
        )));
    }
    let layout = f1.layout().add(f2.layout())?;
    let g1: Vec<usize> = f1.layout().counts().to_vec();

    if f1.is_zero() || f2.is_zero() {
        return Ok(SymPoly::zero(layout));
    }

    let f1x = f1.expand();
    let f2x = f2.expand();

    // Per-vertex choices of which final slots carry f1's variables.
    let per_vertex: Vec<Vec<Vec<usize>>> = (0..nv)
        .map(|i| (0..layout.count(i)).combinations(g1[i]).collect())
        .collect();

    let mut total = MultiPoly::zero(layout.clone());
    let mut choice = vec![0usize; nv];
    loop {
        total.add_assign(&shuffle_term(
            &f1x, &f2x, arrows, &layout, &per_vertex, &choice,
        ));
        // odometer over the per-vertex choice lists
        let mut v = 0;
        loop {
            if v == nv {
                // final exact division by the common denominator
                return finish(total, arrows, &layout, &g1, f2.layout().counts());
            }
            choice[v] += 1;
            if choice[v] < per_vertex[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}

fn shuffle_term(
    f1x: &MultiPoly,
    f2x: &MultiPoly,
    arrows: &[Vec<u32>],
    layout: &VarLayout,
    per_vertex: &[Vec<Vec<usize>>],
    choice: &[usize],
) -> MultiPoly {
    let nv = arrows.len();
    // global variable indices assigned to each factor, per vertex
    let mut a_slots: Vec<Vec<usize>> = Vec::with_capacity(nv);
    let mut b_slots: Vec<Vec<usize>> = Vec::with_capacity(nv);
    for i in 0..nv {
        let offset = layout.offset(i);
        let picked = &per_vertex[i][choice[i]];
        let a: Vec<usize> = picked.iter().map(|s| offset + s).collect();
        let b: Vec<usize> = (0..layout.count(i))
            .filter(|s| !picked.contains(s))
            .map(|s| offset + s)
            .collect();
        a_slots.push(a);
        b_slots.push(b);
    }

    let map1: Vec<usize> = a_slots.iter().flatten().copied().collect();
    let map2: Vec<usize> = b_slots.iter().flatten().copied().collect();
    let mut term = f1x.relabel(&map1, layout).mul(&f2x.relabel(&map2, layout));

    let mut sign_flips = 0usize;
    for i in 0..nv {
        for j in 0..nv {
            // same-vertex denominator folds into the loop count
            let net = if i == j {
                i64::from(arrows[i][i]) - 1
            } else {
                i64::from(arrows[i][j])
            };
            if net > 0 {
                for &a in &a_slots[i] {
                    for &b in &b_slots[j] {
                        for _ in 0..net {
                            term = term.mul_binomial(b, a);
                        }
                    }
                }
            } else if net < 0 && !a_slots[i].is_empty() && !b_slots[i].is_empty() {
                // loop-free vertex with a true denominator: compensate up to
                // the full Vandermonde, which the final division removes.
                // Sign from rewriting split pairs in Vandermonde order.
                for &a in &a_slots[i] {
                    for &b in &b_slots[i] {
                        if a > b {
                            sign_flips += 1;
                        }
                    }
                }
                for slots in [&a_slots[i], &b_slots[i]] {
                    for (u, &a) in slots.iter().enumerate() {
                        for &b in &slots[u + 1..] {
                            term = term.mul_binomial(b, a);
                        }
                    }
                }
            }
        }
    }
    if sign_flips % 2 == 1 {
        term = term.neg();
    }
    term
}

fn finish(
    total: MultiPoly,
    arrows: &[Vec<u32>],
    layout: &VarLayout,
    g1: &[usize],
    g2: &[usize],
) -> Result<SymPoly> {
    let mut result = total;
    for i in 0..arrows.len() {
        if arrows[i][i] > 0 || g1[i] == 0 || g2[i] == 0 {
            continue;
        }
        let offset = layout.offset(i);
        let n = layout.count(i);
        for a in 0..n {
            for b in a + 1..n {
                result = result.div_binomial_exact(offset + b, offset + a)?;
            }
        }
    }
    canonicalize(&result)
        .map_err(|e| CohaError::InternalConsistency(format!("shuffle sum not symmetric: {e}")))
}
