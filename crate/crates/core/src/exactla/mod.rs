//! Exact sparse linear algebra over the integers and rationals.
//!
//! Every routine first splits a matrix into the connected blocks of its
//! row/column incidence graph and works block by block, which keeps the
//! graded matrices of this crate small.

mod components;
mod elim;
mod lattice;
mod modular;
mod snf;
mod sparse;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use lattice::hermite_normal_form;
pub use modular::rank_mod_p;
pub use snf::SnfResult;
pub use sparse::{SparseMat, SparseVec};

/// Default column limit for [`smith_normal_form`].
pub const SNF_COLUMN_LIMIT: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactLaError {
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix has {cols} columns, above the Smith form limit {limit}")]
    TooLarge { cols: usize, limit: usize },
}

fn echelons(m: &SparseMat, reduce: bool) -> Vec<(Vec<usize>, elim::Echelon)> {
    components::blocks(m)
        .into_par_iter()
        .map(|b| {
            let mut e = elim::echelon(b.rows, b.cols.len());
            if reduce {
                e.reduce();
            }
            (b.cols, e)
        })
        .collect()
}

/// Rank over Q.
pub fn rank(m: &SparseMat) -> usize {
    echelons(m, false).iter().map(|(_, e)| e.rank()).sum()
}

/// Basis of `{v in Z^cols : m v = 0}` in row Hermite normal form: positive
/// leading entries, sorted by leading column.
pub fn kernel_lattice(m: &SparseMat) -> Vec<Vec<BigInt>> {
    let mut out: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for (cols, e) in echelons(m, true) {
        let k = lattice::block_kernel(&e, false, true);
        for v in k.integral {
            let mut g = vec![BigInt::zero(); m.cols()];
            for (local, x) in v.into_iter().enumerate() {
                g[cols[local]] = x;
            }
            let lead = g.iter().position(|x| !x.is_zero()).expect("nonzero kernel vector");
            out.push((lead, g));
        }
    }
    out.sort_by_key(|(lead, _)| *lead);
    out.into_iter().map(|(_, v)| v).collect()
}

/// Reduced basis of the kernel over Q: one vector per free column `f`, with a 1 at
/// `f` and zeros at the other free columns. Sorted by `f`.
pub fn rational_kernel(m: &SparseMat) -> Vec<Vec<BigRational>> {
    let mut out: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for (cols, e) in echelons(m, true) {
        let free = e.free_columns();
        let k = lattice::block_kernel(&e, true, false);
        for (f, v) in free.into_iter().zip(k.rational) {
            let mut g = vec![BigRational::zero(); m.cols()];
            for (local, x) in v.into_iter().enumerate() {
                g[cols[local]] = x;
            }
            out.push((cols[f], g));
        }
    }
    out.sort_by_key(|(f, _)| *f);
    out.into_iter().map(|(_, v)| v).collect()
}

/// Smith normal form with the default column limit.
pub fn smith_normal_form(m: &SparseMat) -> Result<SnfResult, ExactLaError> {
    smith_normal_form_with_limit(m, Some(SNF_COLUMN_LIMIT))
}

/// Smith normal form; `limit: None` lifts the column guard.
pub fn smith_normal_form_with_limit(m: &SparseMat, limit: Option<usize>) -> Result<SnfResult, ExactLaError> {
    if let Some(limit) = limit {
        if m.cols() > limit {
            return Err(ExactLaError::TooLarge { cols: m.cols(), limit });
        }
    }
    let per_block: Vec<Vec<BigInt>> = components::blocks(m)
        .into_par_iter()
        .map(|b| {
            let (units, rest) = elim::unit_eliminate(b.rows, b.cols.len());
            let mut d = vec![BigInt::one(); units];
            d.extend(snf::dense_snf(&rest));
            d
        })
        .collect();
    Ok(SnfResult { divisors: snf::chain(per_block.concat()) })
}

/// Solves `m x = rhs` over Q. Returns `None` when the system is inconsistent.
pub fn solve(m: &SparseMat, rhs: &[BigInt]) -> Result<Option<Vec<BigRational>>, ExactLaError> {
    if rhs.len() != m.rows() {
        return Err(ExactLaError::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            rhs.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let rhs_col: SparseVec = rhs.iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect();
    let b = SparseMat::from_columns(m.rows(), &[rhs_col])?;
    let aug = SparseMat::hstack(&[m, &b])?;
    // a kernel vector of [m | rhs] with last coordinate -1 is a solution
    let Some(v) = rational_kernel(&aug).into_iter().find(|v| !v[n].is_zero()) else {
        return Ok(None);
    };
    let scale = -v[n].clone();
    Ok(Some(v[..n].iter().map(|x| x / &scale).collect()))
}

/// Coordinates of `y` in a basis given in row echelon form (strictly increasing
/// leading columns, as returned by [`kernel_lattice`] and [`hermite_normal_form`]).
/// `None` when `y` is outside the rational span.
pub fn echelon_coordinates(basis: &[Vec<BigInt>], y: &[BigInt]) -> Option<Vec<BigRational>> {
    let mut rest: Vec<BigRational> = y.iter().cloned().map(BigRational::from_integer).collect();
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let lead = b.iter().position(|x| !x.is_zero())?;
        let x = &rest[lead] / BigRational::from_integer(b[lead].clone());
        if !x.is_zero() {
            for (r, v) in rest.iter_mut().zip(b).skip(lead) {
                if !v.is_zero() {
                    *r -= &x * BigRational::from_integer(v.clone());
                }
            }
        }
        out.push(x);
    }
    rest.iter().all(Zero::is_zero).then_some(out)
}

/// Basis of the intersection of the column spans of `bases` over Q, as the
/// columns of a matrix in Hermite form (rows of the HNF become columns).
pub fn intersect_columnspaces(bases: &[SparseMat]) -> Result<SparseMat, ExactLaError> {
    let Some(first) = bases.first() else {
        return Err(ExactLaError::DimensionMismatch("no subspaces given".into()));
    };
    let rows = first.rows();
    let mut current = span_basis(first)?;
    for b in &bases[1..] {
        if b.rows() != rows {
            return Err(ExactLaError::DimensionMismatch(format!(
                "subspaces live in dimensions {rows} and {}",
                b.rows()
            )));
        }
        let mut neg = b.clone();
        for c in 0..neg.cols() {
            neg.scale_column(c, &BigInt::from(-1));
        }
        let stacked = SparseMat::hstack(&[&current, &neg])?;
        let k = current.cols();
        let vectors: Vec<SparseVec> = kernel_lattice(&stacked)
            .iter()
            .map(|v| {
                let x: Vec<BigInt> = v[..k].to_vec();
                current.mul_vec(&x).into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        current = span_basis(&SparseMat::from_columns(rows, &vectors)?)?;
    }
    Ok(current)
}

/// Hermite basis of the lattice spanned by the columns of `m`, computed block by
/// block and ordered by leading row.
pub fn span_basis(m: &SparseMat) -> Result<SparseMat, ExactLaError> {
    let t = m.transpose();
    let mut out: Vec<(usize, SparseVec)> = components::blocks(&t)
        .into_par_iter()
        .flat_map_iter(|b| {
            let dense: Vec<Vec<BigInt>> = b
                .rows
                .iter()
                .map(|r| {
                    let mut v = vec![BigInt::zero(); b.cols.len()];
                    for (i, x) in r {
                        v[*i] = x.clone();
                    }
                    v
                })
                .collect();
            hermite_normal_form(dense)
                .into_iter()
                .map(|v| {
                    let sv: SparseVec =
                        v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (b.cols[i], x)).collect();
                    (sv[0].0, sv)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_by_key(|(lead, _)| *lead);
    let cols: Vec<SparseVec> = out.into_iter().map(|(_, v)| v).collect();
    SparseMat::from_columns(m.rows(), &cols)
}
