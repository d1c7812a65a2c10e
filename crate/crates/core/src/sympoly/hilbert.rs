//! Dimension counts of symmetric polynomials by degree.

use super::VarLayout;
use crate::error::Result;
use crate::qarith::{rat, TruncatedSeries};

/// Hilbert series of the ring of vertex-grouped symmetric polynomials:
/// the coefficient of `t^k` counts orbit keys of total degree `k`.
/// Equals `prod_i prod_{j=1}^{γ^i} 1/(1 - t^j)` truncated at the cutoff.
pub fn hilbert_series_sym(layout: &VarLayout, cutoff: i64) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(cutoff);
    for &n in layout.counts() {
        for j in 1..=n as i64 {
            let factor = TruncatedSeries::from_terms(cutoff, [(0, rat(1)), (j, rat(-1))]);
            acc = acc.mul(&factor.inverse()?);
        }
    }
    Ok(acc)
}
