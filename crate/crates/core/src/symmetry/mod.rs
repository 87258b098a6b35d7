//! The action of `S3` on the free Lie ring on `{a, b, c}` (modulo inner classes),
//! on `L[3]` and on its derivations; characters of the kernel of `tau`.

mod perm;
#[cfg(test)]
mod tests;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::derivations::{generators, Derivation, DerivationError};
use crate::exactla::{self, SparseMat};
use crate::freelie::{Alphabet, LieElement};
use crate::johnson::{JohnsonError, KernelReport, LiePolynomial, SymbolSet};
use crate::packed::{consolidate, tower, Overflow, PackedDer, PackedTensor};

pub use perm::S3Element;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("the action of {sigma} does not preserve the kernel in degree {degree}")]
    KernelNotStable { sigma: S3Element, degree: usize },
    #[error("traces are not constant on conjugacy classes in degree {0}")]
    NotClassFunction(usize),
    #[error("polynomial must be over the symbols a, b, c")]
    WrongAlphabet,
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error(transparent)]
    Johnson(#[from] JohnsonError),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
}

/// Class of `k_ij` (1-based, n = 3) in degree 1 as `C_m + sign * letter`, letters
/// `a = k12, b = k21, c = k13`. From `C_m = sum_{j != m} k_jm`:
/// `k31 = C1 - b`, `k32 = C2 - a`, `k23 = C3 - c`.
pub(crate) fn kappa_class(i: usize, j: usize) -> (Option<usize>, i64, u8) {
    match (i, j) {
        (1, 2) => (None, 1, 0),
        (2, 1) => (None, 1, 1),
        (1, 3) => (None, 1, 2),
        (3, 1) => (Some(1), -1, 1),
        (3, 2) => (Some(2), -1, 0),
        (2, 3) => (Some(3), -1, 2),
        _ => panic!("not a McCool symbol for n = 3: ({i}, {j})"),
    }
}

/// Action of `sigma` on `a, b, c` modulo inner classes: `letter[l]` with `sign[l]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub letter: [u8; 3],
    pub sign: [i64; 3],
}

pub fn signed_generator_action(sigma: &S3Element) -> SignedPermutation {
    let symbols = SymbolSet::abc();
    let mut out = SignedPermutation { letter: [0; 3], sign: [1; 3] };
    for l in 0..3u8 {
        let (i, j) = symbols.pair(l);
        let (_, s, m) = kappa_class(sigma.apply(i), sigma.apply(j));
        out.letter[usize::from(l)] = m;
        out.sign[usize::from(l)] = s;
    }
    out
}

/// Matrix of `sigma` on `(a, b, c)`: column `l` holds the image of letter `l`.
pub fn action_on_generators(sigma: &S3Element) -> [[i64; 3]; 3] {
    let p = signed_generator_action(sigma);
    let mut m = [[0; 3]; 3];
    for l in 0..3 {
        m[usize::from(p.letter[l])][l] = p.sign[l];
    }
    m
}

/// Applies a signed letter permutation to every word of a packed tensor over 3 letters.
pub(crate) fn permute_tensor(t: &PackedTensor, letter: &[u8; 3], sign: &[i64; 3]) -> Result<PackedTensor, Overflow> {
    let mut out = Vec::with_capacity(t.terms.len());
    for (w, c) in &t.terms {
        let (mut x, mut image, mut s, mut scale) = (*w, 0u64, *c, 1u64);
        for _ in 0..t.degree {
            let d = (x % 3) as usize;
            x /= 3;
            image += u64::from(letter[d]) * scale;
            scale *= 3;
            if sign[d] < 0 {
                s = s.checked_neg().ok_or(Overflow)?;
            }
        }
        out.push((image, s));
    }
    Ok(PackedTensor { degree: t.degree, terms: consolidate(out)? })
}

/// Image of `p` (over `a, b, c`) under `sigma`, modulo inner classes.
pub fn act(sigma: &S3Element, p: &LiePolynomial) -> Result<LiePolynomial, SymmetryError> {
    if p.alphabet().labels() != ["a", "b", "c"] {
        return Err(SymmetryError::WrongAlphabet);
    }
    if p.is_zero() {
        return Ok(p.clone());
    }
    let g = signed_generator_action(sigma);
    let t = permute_tensor(&PackedTensor::from_lie(p)?, &g.letter, &g.sign)?;
    Ok(t.to_lie(p.alphabet())?)
}

/// Matrix of `sigma` on the Lyndon basis of degree `k` (columns are images).
pub fn action_on_degree(sigma: &S3Element, k: usize) -> Result<SparseMat, SymmetryError> {
    let tw = tower(3, k);
    let g = signed_generator_action(sigma);
    let mut columns = Vec::with_capacity(tw.len());
    for e in &tw.expansions {
        let t = permute_tensor(&PackedTensor { degree: k, terms: e.clone() }, &g.letter, &g.sign)?;
        columns.push(tw.lie_coordinates(&t)?.into_iter().map(|(i, c)| (i, BigInt::from(c))).collect());
    }
    Ok(SparseMat::from_columns(tw.len(), &columns).expect("indices in range"))
}

/// `sigma` on `L[3]`: `X_i -> X_sigma(i)`.
pub(crate) fn permute_x(sigma: &S3Element, t: &PackedTensor) -> Result<PackedTensor, Overflow> {
    let letter = [0, 1, 2].map(|i| sigma.apply0(i) as u8);
    permute_tensor(t, &letter, &[1; 3])
}

/// `(sigma . d)(X_sigma(i)) = sigma(d(X_i))`.
pub fn act_on_packed_derivation(sigma: &S3Element, d: &PackedDer) -> Result<PackedDer, Overflow> {
    let mut images = vec![PackedTensor::zero(d.degree + 1); 3];
    for (i, img) in d.images.iter().enumerate() {
        images[sigma.apply0(i)] = permute_x(sigma, img)?;
    }
    Ok(PackedDer { degree: d.degree, images })
}

pub fn act_on_derivation(sigma: &S3Element, d: &Derivation) -> Result<Derivation, SymmetryError> {
    assert_eq!(d.n(), 3, "the S3 action is defined on L[3]");
    let p = act_on_packed_derivation(sigma, &d.to_packed()?)?;
    Ok(Derivation::from_packed(&generators(3), &p)?)
}

/// Character values on the classes of `id`, `(12)` and `(123)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct Character {
    pub identity: i64,
    pub transposition: i64,
    pub three_cycle: i64,
}

impl From<[i64; 3]> for Character {
    fn from(v: [i64; 3]) -> Self {
        Character { identity: v[0], transposition: v[1], three_cycle: v[2] }
    }
}

impl From<Character> for [i64; 3] {
    fn from(c: Character) -> Self {
        [c.identity, c.transposition, c.three_cycle]
    }
}

impl std::fmt::Display for Character {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.identity, self.transposition, self.three_cycle)
    }
}

/// Multiplicities of the trivial, sign and 2-dimensional irreducible representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub trivial: i64,
    pub sign: i64,
    pub standard: i64,
}

impl Character {
    /// `None` unless all three multiplicities are nonnegative integers.
    pub fn decompose(&self) -> Option<Decomposition> {
        let (a, b, c) = (self.identity, self.transposition, self.three_cycle);
        let (t, s, d) = (a + 3 * b + 2 * c, a - 3 * b + 2 * c, 2 * a - 2 * c);
        if t % 6 != 0 || s % 6 != 0 || d % 6 != 0 {
            return None;
        }
        let out = Decomposition { trivial: t / 6, sign: s / 6, standard: d / 6 };
        (out.trivial >= 0 && out.sign >= 0 && out.standard >= 0).then_some(out)
    }
}

fn dense(p: &LiePolynomial, k: usize) -> Vec<BigInt> {
    let tw = tower(3, k);
    let mut v = vec![BigInt::zero(); tw.len()];
    for (w, c) in p.terms() {
        v[tw.index_of(crate::packed::pack(w, 3)).expect("Lyndon key")] = c.clone();
    }
    v
}

/// Trace of every group element on the kernel in the report's degree.
pub fn kernel_traces(report: &KernelReport) -> Result<Vec<(S3Element, BigRational)>, SymmetryError> {
    let k = report.degree;
    let basis: Vec<Vec<BigInt>> = report.basis.iter().map(|p| dense(p, k)).collect();
    let mut out = Vec::new();
    for sigma in S3Element::all() {
        if basis.is_empty() {
            out.push((sigma, BigRational::zero()));
            continue;
        }
        let m = action_on_degree(&sigma, k)?;
        let mut trace = BigRational::zero();
        for (j, v) in basis.iter().enumerate() {
            let image = m.mul_vec(v);
            let x = exactla::echelon_coordinates(&basis, &image)
                .ok_or(SymmetryError::KernelNotStable { sigma, degree: k })?;
            trace += &x[j];
        }
        out.push((sigma, trace));
    }
    Ok(out)
}

/// Character of the kernel of `tau` in the report's degree.
pub fn kernel_character(report: &KernelReport) -> Result<Character, SymmetryError> {
    let traces = kernel_traces(report)?;
    let value = |s: S3Element| -> Result<i64, SymmetryError> {
        let t = &traces.iter().find(|(g, _)| *g == s).expect("all elements").1;
        t.is_integer()
            .then(|| i64::try_from(t.numer()).ok())
            .flatten()
            .ok_or(SymmetryError::NotClassFunction(report.degree))
    };
    let chi = Character {
        identity: value(S3Element::IDENTITY)?,
        transposition: value(S3Element::T12)?,
        three_cycle: value(S3Element::C123)?,
    };
    let consistent = value(S3Element::T13)? == chi.transposition
        && value(S3Element::T23)? == chi.transposition
        && value(S3Element::C132)? == chi.three_cycle
        && chi.identity == report.kernel_dim as i64;
    if !consistent {
        return Err(SymmetryError::NotClassFunction(report.degree));
    }
    Ok(chi)
}

/// `tau(sigma . P) = sigma . tau(P)`, with the action on `P` taken in the full
/// semidirect product, where it mixes in inner classes.
pub fn equivariance_check(sigma: &S3Element, p: &LiePolynomial) -> Result<bool, SymmetryError> {
    use crate::psigma3::{sd_s3_action_packed, SdPacked};
    if p.alphabet().labels() != ["a", "b", "c"] {
        return Err(SymmetryError::WrongAlphabet);
    }
    if p.degree() == 0 {
        return Ok(true);
    }
    let tau_p = crate::johnson::TauEngine::new(SymbolSet::abc()).evaluate_packed(p)?;
    let lhs_src = SdPacked { h: PackedTensor::zero(p.degree()), g: PackedTensor::from_lie(p)?, g_tau: tau_p.clone() };
    let moved = sd_s3_action_packed(sigma, &lhs_src)?;
    let lhs = moved.tau()?;
    let rhs = act_on_packed_derivation(sigma, &tau_p)?;
    Ok(lhs == rhs)
}

/// The symbol alphabet the action is defined on.
pub fn abc_alphabet() -> Arc<Alphabet> {
    SymbolSet::abc().alphabet().clone()
}

/// Builds `sigma . x` for a generator letter in the free Lie ring: a signed letter.
pub fn act_on_letter(sigma: &S3Element, l: u8) -> LiePolynomial {
    let g = signed_generator_action(sigma);
    let alpha = abc_alphabet();
    LieElement::generator(&alpha, g.letter[usize::from(l)]).scale(&BigInt::from(g.sign[usize::from(l)]))
}
