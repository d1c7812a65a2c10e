//! Explicit quiver representations over exact fields: framing, stability,
//! finite-field counting, Hom/Ext, and cyclic-vector checks.
//!
//! Finite-field results are evidence about the algebraically closed case,
//! not proofs; everything here is exact over `Q` or `F_p` with explicit
//! capacity limits on the enumeration-heavy operations.

mod charge;
mod count;
mod ext;
mod rep;
mod stability;

pub use charge::{arg_less, CentralCharge};
pub use count::{count_stable_framed, group_order, moduli_dimension, stabilizer_is_trivial, CountResult};
pub use ext::{build_extension, middle_cyclic_check, Extension};
pub use rep::{ext1_dim, hom_dim, is_simple, ArrowId, Matrix, QuiverRep};
pub use stability::{extend_quiver, is_stable_framed, subspaces_fp, FramedRep};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{CohaError, Result};

/// Ground field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || !(2..p).all(|d| d * d > p || p % d != 0) {
            return Err(CohaError::BadInput(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = s.strip_prefix('F') {
            if let Ok(p) = rest.parse::<u64>() {
                return Self::prime(p);
            }
        }
        Err(CohaError::BadInput(format!(
            "unknown field {s:?}; expected \"Q\" or \"F<p>\""
        )))
    }

    pub fn render(&self) -> String {
        match self {
            FieldSpec::Rational => "Q".to_string(),
            FieldSpec::Prime(p) => format!("F{p}"),
        }
    }
}

/// Reduce a rational mod `p`; fails when the denominator is divisible by `p`.
pub fn rational_to_fp(r: &BigRational, p: u64) -> Result<u64> {
    let pi = BigInt::from(p);
    let num = r.numer().mod_floor(&pi).to_u64().unwrap();
    let den = r.denom().mod_floor(&pi).to_u64().unwrap();
    if den == 0 {
        return Err(CohaError::FieldMismatch(format!(
            "denominator of {r} vanishes mod {p}"
        )));
    }
    let f = crate::linalg::PrimeField::new(p);
    use crate::linalg::FieldOps;
    Ok(f.mul(&num, &f.inv(&den)))
}

/// Enumeration budget; the environment variable `COHA_LAB_CAPACITY`
/// overrides the default.
pub fn capacity_limit() -> u64 {
    std::env::var("COHA_LAB_CAPACITY")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1 << 26)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rat_frac;

    #[test]
    fn field_parsing() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse("F5").unwrap(), FieldSpec::Prime(5));
        assert!(FieldSpec::parse("F4").is_err());
        assert!(FieldSpec::parse("R").is_err());
        assert_eq!(FieldSpec::Prime(3).render(), "F3");
    }

    #[test]
    fn rational_reduction() {
        assert_eq!(rational_to_fp(&rat_frac(1, 2), 3).unwrap(), 2); // 2^{-1} = 2 mod 3
        assert_eq!(rational_to_fp(&rat_frac(-1, 1), 5).unwrap(), 4);
        assert!(rational_to_fp(&rat_frac(1, 3), 3).is_err());
    }
}
