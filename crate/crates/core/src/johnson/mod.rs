//! The Johnson morphism `tau` from free Lie rings on McCool symbols to
//! derivations of `L[n]`, degree-wise kernels, and the degree-6 element `omega`.

mod engine;
mod kernel;
mod omega;
mod symbols;
#[cfg(test)]
mod tests;

use num_bigint::BigInt;

use crate::derivations::{generators, Derivation, DerivationError};
use crate::freelie::{FreeLieError, LieElement};
use crate::packed::Overflow;

pub use engine::TauEngine;
pub use kernel::{bracket_map_rank, kernel_report, BracketMapReport, KernelOptions, KernelReport, KernelReportJson};
pub use omega::{left_normed_sum, omega, omega_terms};
pub use symbols::SymbolSet;

/// Lie polynomial in McCool symbols.
pub type LiePolynomial = LieElement<BigInt>;

/// Kernel reports above this degree need an explicit opt-in.
pub const DEFAULT_MAX_DEGREE: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JohnsonError {
    #[error("index out of range: ({i}, {j}) for n = {n}")]
    IndexError { n: usize, i: usize, j: usize },
    #[error("degree {degree} is above the cap {cap}; raise the cap explicitly")]
    DegreeCap { degree: usize, cap: usize },
    #[error("degree must be at least 1")]
    DegreeZero,
    #[error("polynomial is over alphabet {found:?}, expected the symbols {expected:?}")]
    WrongAlphabet { expected: Vec<String>, found: Vec<String> },
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
    #[error("linear algebra: {0}")]
    Linear(String),
}

/// `tau(k_ij) = d_ij` on `L[n]` (1-based indices).
pub fn tau_generator(n: usize, i: usize, j: usize) -> Result<Derivation, JohnsonError> {
    if n < 2 || i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(JohnsonError::IndexError { n, i, j });
    }
    Ok(Derivation::elementary(&generators(n), i, j)?)
}

/// `tau(p)` for a homogeneous polynomial over `symbols`.
pub fn tau_evaluate(symbols: &SymbolSet, p: &LiePolynomial) -> Result<Derivation, JohnsonError> {
    TauEngine::new(symbols.clone()).evaluate(p)
}

/// `tau(p)` through generic derivation brackets along the Lyndon bracketing.
/// Slow; kept as an independent check of [`tau_evaluate`].
pub fn tau_evaluate_reference(symbols: &SymbolSet, p: &LiePolynomial) -> Result<Derivation, JohnsonError> {
    symbols.check(p)?;
    let xs = generators(symbols.n());
    let mut out = Derivation::zero(&xs, p.degree().max(1));
    for (w, c) in p.terms() {
        out.add_scaled(&reference_basis(symbols, w)?, c);
    }
    Ok(out)
}

fn reference_basis(symbols: &SymbolSet, w: &[u8]) -> Result<Derivation, JohnsonError> {
    match crate::freelie::standard_split(w) {
        None => {
            let (i, j) = symbols.pair(w[0]);
            tau_generator(symbols.n(), i, j)
        }
        Some(s) => Ok(reference_basis(symbols, &w[..s])?.bracket(&reference_basis(symbols, &w[s..])?)),
    }
}
