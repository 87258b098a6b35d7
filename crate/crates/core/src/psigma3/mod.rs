//! `L(PSigma_3)` as the semidirect product `h x| g`: `h` is free on the inner
//! classes `C1, C2, C3`, `g` is free on `a, b, c`, and `g` acts on `h` through
//! `tau` with `C_i` read as `X_i`.

mod action;
mod checks;
#[cfg(test)]
mod tests;

use std::sync::Arc;

use num_bigint::BigInt;

use crate::derivations::{generators, Derivation, DerivationError};
use crate::freelie::{witt_dimension, Alphabet, FreeLieError, LieElement};
use crate::johnson::{tau_evaluate, JohnsonError, LiePolynomial, SymbolSet};
use crate::packed::Overflow;
use crate::symmetry::S3Element;

pub use action::{sd_s3_action_packed, S3Action, SdPacked};
pub use checks::{
    h_injectivity_rank, intersection_kappa, sd_tau_kernel, tau_h_cap_tau_g, SdKernelReport, DEFAULT_INTERSECTION_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PsigmaError {
    #[error("parts have degrees {h} and {g}")]
    DegreeMismatch { h: usize, g: usize },
    #[error("inner part must be over C1, C2, C3 and the other part over a, b, c")]
    WrongAlphabet,
    #[error("degree {degree} is above the cap {cap}; raise the cap explicitly")]
    DegreeCap { degree: usize, cap: usize },
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error(transparent)]
    Johnson(#[from] JohnsonError),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
    #[error("linear algebra: {0}")]
    Linear(String),
}

/// The alphabet `C1 < C2 < C3` of inner classes.
pub fn inner_alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::numbered("C", 3))
}

/// Homogeneous element `(h, g)` of `h x| g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdElement {
    h: LieElement<BigInt>,
    g: LiePolynomial,
}

impl SdElement {
    pub fn new(h: LieElement<BigInt>, g: LiePolynomial) -> Result<Self, PsigmaError> {
        if h.alphabet().labels() != ["C1", "C2", "C3"] || g.alphabet().labels() != ["a", "b", "c"] {
            return Err(PsigmaError::WrongAlphabet);
        }
        if h.degree() != g.degree() {
            return Err(PsigmaError::DegreeMismatch { h: h.degree(), g: g.degree() });
        }
        Ok(SdElement { h, g })
    }

    pub fn zero(degree: usize) -> Self {
        SdElement {
            h: LieElement::zero(&inner_alphabet(), degree),
            g: LieElement::zero(SymbolSet::abc().alphabet(), degree),
        }
    }

    pub fn from_h(h: LieElement<BigInt>) -> Result<Self, PsigmaError> {
        let g = LieElement::zero(SymbolSet::abc().alphabet(), h.degree());
        Self::new(h, g)
    }

    pub fn from_g(g: LiePolynomial) -> Result<Self, PsigmaError> {
        let h = LieElement::zero(&inner_alphabet(), g.degree());
        Self::new(h, g)
    }

    /// `C_m` (1-based).
    pub fn inner_generator(m: usize) -> Self {
        let alpha = inner_alphabet();
        Self::from_h(LieElement::generator(&alpha, (m - 1) as u8)).expect("valid parts")
    }

    /// Class of `k_ij` for `n = 3` (1-based), e.g. `k31 = (C1, -b)`.
    pub fn kappa(i: usize, j: usize) -> Self {
        let (m, sign, letter) = crate::symmetry::kappa_class(i, j);
        let g = LieElement::generator(SymbolSet::abc().alphabet(), letter).scale(&BigInt::from(sign));
        let mut out = Self::from_g(g).expect("valid parts");
        if let Some(m) = m {
            out.h = Self::inner_generator(m).h;
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.g.degree()
    }

    pub fn h(&self) -> &LieElement<BigInt> {
        &self.h
    }

    pub fn g(&self) -> &LiePolynomial {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero() && self.g.is_zero()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        SdElement { h: self.h.scale(c), g: self.g.scale(c) }
    }
}

impl std::ops::Add for SdElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        SdElement { h: self.h + rhs.h, g: self.g + rhs.g }
    }
}

impl std::ops::Sub for SdElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        SdElement { h: self.h - rhs.h, g: self.g - rhs.g }
    }
}

impl std::fmt::Display for SdElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.h, self.g)
    }
}

/// `rk L_k(PSigma_3) = 2 rk L_k[3]`.
pub fn sd_rank(k: usize) -> u64 {
    2 * witt_dimension(3, k)
}

fn as_x(h: &LieElement<BigInt>) -> Result<LieElement<BigInt>, PsigmaError> {
    Ok(h.relabel(&generators(3))?)
}

/// `[(h_u, g_u), (h_v, g_v)] = ([h_u, h_v] + tau(g_u)(h_v) - tau(g_v)(h_u), [g_u, g_v])`.
pub fn sd_bracket(u: &SdElement, v: &SdElement) -> Result<SdElement, PsigmaError> {
    let symbols = SymbolSet::abc();
    let mut h = as_x(&u.h)?.bracket_rewrite(&as_x(&v.h)?);
    if !u.g.is_zero() && !v.h.is_zero() {
        h = h + tau_evaluate(&symbols, &u.g)?.apply(&as_x(&v.h)?);
    }
    if !v.g.is_zero() && !u.h.is_zero() {
        h = h - tau_evaluate(&symbols, &v.g)?.apply(&as_x(&u.h)?);
    }
    Ok(SdElement { h: h.relabel(&inner_alphabet())?, g: u.g.bracket_rewrite(&v.g) })
}

/// `ad(h) + tau(g)` on `L[3]`.
pub fn sd_tau(u: &SdElement) -> Result<Derivation, PsigmaError> {
    let inner = Derivation::inner(&as_x(&u.h)?);
    if u.g.is_zero() {
        return Ok(inner);
    }
    Ok(inner + tau_evaluate(&SymbolSet::abc(), &u.g)?)
}

/// Image of `u` under `sigma`, a graded Lie automorphism of `h x| g`.
pub fn sd_s3_action(sigma: &S3Element, u: &SdElement) -> Result<SdElement, PsigmaError> {
    let p = sd_s3_action_packed(sigma, &SdPacked::from_element(u)?)?;
    p.to_element()
}
