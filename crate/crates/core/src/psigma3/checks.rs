use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::action::S3Action;
use super::{PsigmaError, SdPacked};
use crate::exactla::{self, SparseMat, SparseVec};
use crate::johnson::{SymbolSet, TauEngine};
use crate::packed::{tower, unpack, PackedDer, PackedTensor};
use crate::symmetry::S3Element;

/// Default degree cap for [`intersection_kappa`].
pub const DEFAULT_INTERSECTION_CAP: usize = 7;

fn linear(e: exactla::ExactLaError) -> PsigmaError {
    PsigmaError::Linear(e.to_string())
}

/// Column of a packed derivation of degree `k` in Lie coordinates of `L_{k+1}[3]`.
fn der_column(d: &PackedDer, k: usize) -> Result<SparseVec, PsigmaError> {
    let tw = tower(3, k + 1);
    let mut col = Vec::new();
    for (i, img) in d.images.iter().enumerate() {
        for (r, c) in tw.lie_coordinates(img)? {
            col.push((i * tw.len() + r, BigInt::from(c)));
        }
    }
    Ok(col)
}

/// Matrix of `ad` on the inner part in degree `k`.
fn inner_matrix(k: usize) -> Result<SparseMat, PsigmaError> {
    let tw = tower(3, k);
    let rows = 3 * tower(3, k + 1).len();
    let columns = tw
        .expansions
        .iter()
        .map(|e| der_column(&PackedDer::inner(&PackedTensor { degree: k, terms: e.clone() }, 3)?, k))
        .collect::<Result<Vec<_>, _>>()?;
    SparseMat::from_columns(rows, &columns).map_err(linear)
}

/// Rank of `ad` on `h_k`; equal to `witt(3, k)` when it is injective.
pub fn h_injectivity_rank(k: usize) -> Result<usize, PsigmaError> {
    Ok(exactla::rank(&inner_matrix(k)?))
}

/// Dimension of `tau(h_k) ∩ tau(g_k)`.
pub fn tau_h_cap_tau_g(k: usize) -> Result<usize, PsigmaError> {
    let a = inner_matrix(k)?;
    let t = TauEngine::new(SymbolSet::abc()).matrix(k)?;
    let both = exactla::intersect_columnspaces(&[a, t]).map_err(linear)?;
    Ok(both.cols())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdKernelReport {
    pub degree: usize,
    pub domain_dim: usize,
    pub kernel_dim: usize,
    /// Every kernel vector has zero inner part.
    pub h_part_zero: bool,
}

/// Kernel of `ad + tau` on `L_k(PSigma_3)`.
pub fn sd_tau_kernel(k: usize) -> Result<SdKernelReport, PsigmaError> {
    let a = inner_matrix(k)?;
    let t = TauEngine::new(SymbolSet::abc()).matrix(k)?;
    let m = SparseMat::hstack(&[&a, &t]).map_err(linear)?;
    let kernel = exactla::kernel_lattice(&m);
    let w = a.cols();
    Ok(SdKernelReport {
        degree: k,
        domain_dim: m.cols(),
        kernel_dim: kernel.len(),
        h_part_zero: kernel.iter().all(|v| v[..w].iter().all(Zero::is_zero)),
    })
}

/// Coordinates `(h; g)` of a packed element in `L_k(PSigma_3)`, `2 witt(3, k)` rows.
fn sd_column(u: &SdPacked, k: usize) -> Result<SparseVec, PsigmaError> {
    let tw = tower(3, k);
    let mut col: SparseVec = Vec::new();
    for (i, c) in tw.lie_coordinates(&u.h)? {
        col.push((i, BigInt::from(c)));
    }
    for (i, c) in tw.lie_coordinates(&u.g)? {
        col.push((tw.len() + i, BigInt::from(c)));
    }
    Ok(col)
}

/// `dim (g ∩ c g ∩ c^2 g)_k` with `c = (123)`.
pub fn intersection_kappa(k: usize, cap: usize) -> Result<usize, PsigmaError> {
    if k > cap {
        return Err(PsigmaError::DegreeCap { degree: k, cap });
    }
    let tw = tower(3, k);
    let rows = 2 * tw.len();
    let mut spaces = vec![SparseMat::from_columns(
        rows,
        &(0..tw.len()).map(|i| vec![(tw.len() + i, BigInt::from(1))]).collect::<Vec<_>>(),
    )
    .map_err(linear)?];
    for sigma in [S3Element::C123, S3Element::C132] {
        let mut action = S3Action::new(sigma);
        let mut columns = Vec::with_capacity(tw.len());
        for &word in &tw.words {
            let img = action.basis_image(&unpack(word, 3, k))?;
            columns.push(sd_column(&img, k)?);
        }
        spaces.push(SparseMat::from_columns(rows, &columns).map_err(linear)?);
    }
    Ok(exactla::intersect_columnspaces(&spaces).map_err(linear)?.cols())
}
