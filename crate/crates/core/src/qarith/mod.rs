//! Exact arithmetic kernel: rationals, Laurent polynomials in one formal
//! variable `q`, truncated power series, and q-combinatorics.
//!
//! The same Laurent variable serves both as cohomological-degree marker and
//! as finite-field point-count variable; callers track the semantics.

mod laurent;
mod qcomb;
mod series;

pub use laurent::LaurentPoly;
pub use qcomb::{qbinom, qint};
pub use series::{SeriesElem, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{CohaError, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational from its canonical `"p/q"` (or plain `"p"`) rendering.
pub fn parse_rat(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| CohaError::BadInput(format!("bad rational {s:?}: {e}")))
}

/// Canonical `"p/q"` rendering; integers print without the denominator.
pub fn render_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rendering of a single coefficient without its sign, for term joining.
fn render_abs(r: &BigRational) -> String {
    render_rat(&r.abs())
}
