//! Exact-arithmetic Cohomological Hall algebras of quivers.
//!
//! The algebra of a quiver without potential is realized as a shuffle
//! algebra on vertex-grouped symmetric polynomials. On top of that sit
//! graded dimension series (Poincaré / DT-series) with quantum-dilogarithm
//! factorization, framed-stability computations for explicit quiver
//! representations over exact fields, and the Fock / Hall modules carried
//! by cohomology of framed moduli.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals,
//! series carry their truncation cutoffs, and finite-field counts are
//! integers. No floating point anywhere.

pub mod coha;
pub mod error;
pub mod linalg;
pub mod qarith;
pub mod quiverrep;
pub mod repmod;
pub mod sympoly;

pub use error::{CohaError, Result};
