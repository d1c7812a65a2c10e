//! Representations, intertwiners, and the hereditary Ext formula.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::{rational_to_fp, FieldSpec};
use crate::coha::{euler_form, DimensionVector, Quiver};
use crate::error::{CohaError, Result};
use crate::linalg::{null_space, FieldOps, PrimeField, Rationals, Span};

/// Arrow instance `(from, to, index)`.
pub type ArrowId = (usize, usize, u32);

/// Dense matrix with rational entries (finite-field representations store
/// reduced representatives). Row-major, `rows x cols`, acting on column
/// vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(CohaError::BadInput("ragged matrix".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries converted into a field's element type.
    pub fn to_field_rows<F: FieldOps>(
        &self,
        convert: &dyn Fn(&BigRational) -> Result<F::Elem>,
    ) -> Result<Vec<Vec<F::Elem>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(convert).collect())
            .collect()
    }
}

/// Representation of a quiver in coordinate vector spaces: one matrix per
/// arrow instance, shaped `dim(target) x dim(source)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverRep {
    quiver: Arc<Quiver>,
    field: FieldSpec,
    gamma: DimensionVector,
    mats: BTreeMap<ArrowId, Matrix>,
}

impl QuiverRep {
    pub fn new(
        quiver: Arc<Quiver>,
        field: FieldSpec,
        gamma: DimensionVector,
        mats: BTreeMap<ArrowId, Matrix>,
    ) -> Result<Self> {
        if gamma.len() != quiver.num_vertices() {
            return Err(CohaError::BadInput(
                "dimension vector length does not match quiver".into(),
            ));
        }
        let mut rep = Self {
            quiver: quiver.clone(),
            field,
            gamma,
            mats,
        };
        // every declared arrow needs a matrix of the right shape
        for arrow in quiver.arrow_list() {
            let (from, to, _) = arrow;
            let expect = (rep.dim_at(to), rep.dim_at(from));
            match rep.mats.get(&arrow) {
                Some(m) if (m.rows, m.cols) == expect => {}
                Some(m) => {
                    return Err(CohaError::BadInput(format!(
                        "arrow {arrow:?}: matrix is {}x{}, expected {}x{}",
                        m.rows, m.cols, expect.0, expect.1
                    )));
                }
                None => {
                    rep.mats.insert(arrow, Matrix::zero(expect.0, expect.1));
                }
            }
        }
        if rep.mats.len() != quiver.arrow_list().len() {
            return Err(CohaError::BadInput("matrix for unknown arrow".into()));
        }
        Ok(rep)
    }

    pub fn zero_rep(quiver: Arc<Quiver>, field: FieldSpec, gamma: DimensionVector) -> Self {
        Self::new(quiver, field, gamma, BTreeMap::new()).expect("zero rep is well-formed")
    }

    /// Simple representation at a vertex: one-dimensional there, loops (if
    /// any) acting by zero.
    pub fn simple(quiver: Arc<Quiver>, field: FieldSpec, vertex: usize) -> Self {
        let gamma = DimensionVector::unit(quiver.num_vertices(), vertex);
        Self::zero_rep(quiver, field, gamma)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn gamma(&self) -> &DimensionVector {
        &self.gamma
    }

    pub fn dim_at(&self, vertex: usize) -> usize {
        self.gamma.get(vertex) as usize
    }

    pub fn total_dim(&self) -> usize {
        self.gamma.total() as usize
    }

    pub fn mat(&self, arrow: &ArrowId) -> &Matrix {
        &self.mats[arrow]
    }

    pub fn mats(&self) -> impl Iterator<Item = (&ArrowId, &Matrix)> {
        self.mats.iter()
    }

    /// Offset of a vertex's block in the concatenated coordinate vector.
    pub fn offset(&self, vertex: usize) -> usize {
        (0..vertex).map(|v| self.dim_at(v)).sum()
    }

    fn check_compatible(&self, other: &QuiverRep) -> Result<()> {
        if self.quiver != other.quiver {
            return Err(CohaError::QuiverMismatch);
        }
        if self.field != other.field {
            return Err(CohaError::FieldMismatch(format!(
                "{} vs {}",
                self.field.render(),
                other.field.render()
            )));
        }
        Ok(())
    }
}

fn with_field<T>(
    field: FieldSpec,
    over_q: impl FnOnce(&Rationals, &dyn Fn(&BigRational) -> Result<BigRational>) -> Result<T>,
    over_fp: impl FnOnce(&PrimeField, &dyn Fn(&BigRational) -> Result<u64>) -> Result<T>,
) -> Result<T> {
    match field {
        FieldSpec::Rational => over_q(&Rationals, &|r| Ok(r.clone())),
        FieldSpec::Prime(p) => over_fp(&PrimeField::new(p), &move |r| rational_to_fp(r, p)),
    }
}

fn hom_dim_typed<F: FieldOps>(
    f: &F,
    m: &QuiverRep,
    n: &QuiverRep,
    convert: &dyn Fn(&BigRational) -> Result<F::Elem>,
) -> Result<usize> {
    // unknowns: per vertex v, entries of φ_v (n_v x m_v), row-major
    let nv = m.quiver.num_vertices();
    let block_size: Vec<usize> = (0..nv).map(|v| n.dim_at(v) * m.dim_at(v)).collect();
    let offsets: Vec<usize> = block_size
        .iter()
        .scan(0usize, |acc, s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let unknowns: usize = block_size.iter().sum();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for arrow in m.quiver.arrow_list() {
        let (src, tgt, _) = arrow;
        let ma = m.mat(&arrow).to_field_rows::<F>(convert)?;
        let na = n.mat(&arrow).to_field_rows::<F>(convert)?;
        // φ_tgt ∘ M_a = N_a ∘ φ_src, entrywise at (r, c)
        for r in 0..n.dim_at(tgt) {
            for c in 0..m.dim_at(src) {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..m.dim_at(tgt) {
                    // coefficient of φ_tgt[r,k]
                    let idx = offsets[tgt] + r * m.dim_at(tgt) + k;
                    row[idx] = f.add(&row[idx], &ma[k][c]);
                }
                for k in 0..n.dim_at(src) {
                    // coefficient of φ_src[k,c]
                    let idx = offsets[src] + k * m.dim_at(src) + c;
                    row[idx] = f.sub(&row[idx], &na[r][k]);
                }
                rows.push(row);
            }
        }
    }
    if unknowns == 0 {
        return Ok(0);
    }
    Ok(null_space(f, rows, unknowns).len())
}

/// Dimension of the space of intertwiners `M -> N`.
pub fn hom_dim(m: &QuiverRep, n: &QuiverRep) -> Result<usize> {
    m.check_compatible(n)?;
    with_field(
        m.field,
        |f, c| hom_dim_typed(f, m, n, c),
        |f, c| hom_dim_typed(f, m, n, c),
    )
}

/// Hereditary formula `dim Ext^1(M,N) = dim Hom(M,N) − χ(dim M, dim N)`.
pub fn ext1_dim(m: &QuiverRep, n: &QuiverRep) -> Result<i64> {
    let h = hom_dim(m, n)? as i64;
    let chi = euler_form(&m.quiver, &m.gamma, &n.gamma);
    Ok(h - chi)
}

/// Closure of a set of seeded vectors under the arrow action; returns the
/// per-vertex dimensions of the generated subrepresentation.
pub(crate) fn generated_dims_typed<F: FieldOps>(
    f: &F,
    rep: &QuiverRep,
    seeds: &[(usize, Vec<F::Elem>)],
    mats: &BTreeMap<ArrowId, Vec<Vec<F::Elem>>>,
) -> Vec<usize> {
    let nv = rep.quiver.num_vertices();
    let mut spans: Vec<Span<F>> = (0..nv).map(|v| Span::new(f.clone(), rep.dim_at(v))).collect();
    let mut queue: Vec<(usize, Vec<F::Elem>)> = seeds.to_vec();
    while let Some((v, vec)) = queue.pop() {
        if rep.dim_at(v) == 0 || !spans[v].insert(vec.clone()) {
            continue;
        }
        for arrow in rep.quiver.arrow_list() {
            let (src, tgt, _) = arrow;
            if src != v || rep.dim_at(tgt) == 0 {
                continue;
            }
            let ma = &mats[&arrow];
            let image: Vec<F::Elem> = (0..rep.dim_at(tgt))
                .map(|r| {
                    let mut acc = f.zero();
                    for (k, x) in vec.iter().enumerate() {
                        acc = f.add(&acc, &f.mul(&ma[r][k], x));
                    }
                    acc
                })
                .collect();
            queue.push((tgt, image));
        }
    }
    spans.iter().map(Span::dim).collect()
}

/// Does the path-algebra span of the seeds equal the whole representation?
pub fn vectors_generate(rep: &QuiverRep, seeds: &[(usize, Vec<BigRational>)]) -> Result<bool> {
    with_field(
        rep.field,
        |f, c| {
            let mats = convert_mats(rep, c)?;
            let seeds = convert_seeds(seeds, c)?;
            let dims = generated_dims_typed(f, rep, &seeds, &mats);
            Ok((0..rep.quiver.num_vertices()).all(|v| dims[v] == rep.dim_at(v)))
        },
        |f, c| {
            let mats = convert_mats(rep, c)?;
            let seeds = convert_seeds(seeds, c)?;
            let dims = generated_dims_typed(f, rep, &seeds, &mats);
            Ok((0..rep.quiver.num_vertices()).all(|v| dims[v] == rep.dim_at(v)))
        },
    )
}

pub(crate) fn convert_mats<E: Clone>(
    rep: &QuiverRep,
    convert: &dyn Fn(&BigRational) -> Result<E>,
) -> Result<BTreeMap<ArrowId, Vec<Vec<E>>>> {
    rep.mats()
        .map(|(id, m)| {
            let rows: Result<Vec<Vec<E>>> = (0..m.rows)
                .map(|r| m.row(r).iter().map(convert).collect())
                .collect();
            Ok((*id, rows?))
        })
        .collect()
}

fn convert_seeds<E: Clone>(
    seeds: &[(usize, Vec<BigRational>)],
    convert: &dyn Fn(&BigRational) -> Result<E>,
) -> Result<Vec<(usize, Vec<E>)>> {
    seeds
        .iter()
        .map(|(v, vec)| Ok((*v, vec.iter().map(convert).collect::<Result<Vec<E>>>()?)))
        .collect()
}

/// Simplicity test: total dimension one is always simple; over a prime
/// field, exhaustive subrepresentation search decides the general case.
pub fn is_simple(rep: &QuiverRep) -> Result<bool> {
    if rep.total_dim() == 0 {
        return Ok(false);
    }
    if rep.total_dim() == 1 {
        return Ok(true);
    }
    match rep.field {
        FieldSpec::Prime(_) => {
            let subs = super::stability::enumerate_subreps(rep)?;
            // a proper nonzero invariant tuple means not simple
            Ok(!subs.iter().any(|bases| {
                let total: usize = bases.iter().map(Vec::len).sum();
                total != 0 && total != rep.total_dim()
            }))
        }
        FieldSpec::Rational => Err(CohaError::Capacity(
            "simplicity over Q is only decided in total dimension 1".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rat;

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::a2())
    }

    /// The nonsplit two-dimensional representation `k <- k` of the
    /// two-vertex quiver, arrow matrix (1).
    fn nonsplit_a2(field: FieldSpec) -> QuiverRep {
        let mut mats = BTreeMap::new();
        mats.insert(
            (1usize, 0usize, 0u32),
            Matrix::from_rows(vec![vec![rat(1)]]).unwrap(),
        );
        QuiverRep::new(a2(), field, DimensionVector::new(vec![1, 1]), mats).unwrap()
    }

    #[test]
    fn hom_between_simples() {
        let s1 = QuiverRep::simple(a2(), FieldSpec::Rational, 0);
        let s2 = QuiverRep::simple(a2(), FieldSpec::Rational, 1);
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&s2, &s1).unwrap(), 0);
    }

    #[test]
    fn hom_of_nonsplit_extension() {
        let m = nonsplit_a2(FieldSpec::Rational);
        assert_eq!(hom_dim(&m, &m).unwrap(), 1);
    }

    #[test]
    fn ext_dimensions() {
        let s1 = QuiverRep::simple(a2(), FieldSpec::Rational, 0);
        let s2 = QuiverRep::simple(a2(), FieldSpec::Rational, 1);
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 1);
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 0);
        // A1: Ext^1(M, M) = 0 for semisimple M
        let a1 = Arc::new(Quiver::a1());
        for n in 1..4u32 {
            let m = QuiverRep::zero_rep(
                a1.clone(),
                FieldSpec::Rational,
                DimensionVector::new(vec![n]),
            );
            assert_eq!(ext1_dim(&m, &m).unwrap(), 0);
        }
    }

    #[test]
    fn generation_check() {
        let m = nonsplit_a2(FieldSpec::Prime(2));
        // the vertex-2 basis vector generates everything through the arrow
        assert!(vectors_generate(&m, &[(1, vec![rat(1)])]).unwrap());
        // the vertex-1 vector generates only S1
        assert!(!vectors_generate(&m, &[(0, vec![rat(1)])]).unwrap());
    }

    #[test]
    fn simplicity() {
        let s1 = QuiverRep::simple(a2(), FieldSpec::Prime(2), 0);
        assert!(is_simple(&s1).unwrap());
        let m = nonsplit_a2(FieldSpec::Prime(2));
        assert!(!is_simple(&m).unwrap());
        // over Q only total dimension 1 is decided
        assert!(is_simple(&nonsplit_a2(FieldSpec::Rational)).is_err());
    }
}
