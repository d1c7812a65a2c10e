//! Hall algebra of a quiver without potential: graded components realized
//! as symmetric polynomials, the shuffle product, bigrading, dimension
//! series and their quantum-dilogarithm factorization, and structure checks
//! (freeness for symmetric quivers, two-vertex subalgebra decompositions).

mod element;
mod factor;
mod freeness;
mod quiver;
mod series;
mod subalgebra;

pub use element::{cohdeg, coha_mul, component_basis, component_keys, generator, CohaElement};
pub use factor::{factor_dt_series, reconstruct_product, FactorizationTable};
pub use freeness::{freeness_report, FreenessReport};
pub use quiver::{antisym_form, euler_form, DimensionVector, Quiver};
pub use series::{component_series, dt_series, series_counts, single_vertex_factor, GradedSeries};
pub use subalgebra::{subalgebra_product_rank, SubalgebraRankReport, SubalgebraRankRow};

/// Bigrading of a homogeneous element: class and cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiDegree {
    pub gamma: DimensionVector,
    pub cohdeg: i64,
}
