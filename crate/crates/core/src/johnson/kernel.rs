use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{JohnsonError, LiePolynomial, TauEngine, DEFAULT_MAX_DEGREE};
use crate::coeff::Ring;
use crate::exactla::{self, SparseMat, SparseVec};
use crate::freelie::{lyndon_words, ElementJson, LieElement, Word};
use crate::packed::{pack, tower};

#[derive(Clone, Debug)]
pub struct KernelOptions {
    pub ring: Ring,
    /// Compute the Smith form of the matrix of `tau`.
    pub divisors: bool,
    pub degree_cap: usize,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { ring: Ring::Integers, divisors: false, degree_cap: DEFAULT_MAX_DEGREE }
    }
}

/// Kernel of `tau` restricted to one degree of the free Lie ring on the symbols.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub n: usize,
    pub degree: usize,
    pub ring: Ring,
    pub domain_dim: usize,
    pub image_rank: usize,
    pub kernel_dim: usize,
    /// Hermite-reduced basis of the integral kernel; the smallest Lyndon word in
    /// each element's support has a positive coefficient.
    pub basis: Vec<LiePolynomial>,
    /// Reduced echelon basis over Q, filled for [`Ring::Rationals`].
    pub rational_basis: Option<Vec<LieElement<BigRational>>>,
    pub divisors: Option<Vec<BigInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReportJson {
    pub n: usize,
    pub degree: usize,
    pub domain_dim: usize,
    pub image_rank: usize,
    pub kernel_dim: usize,
    pub basis: Vec<ElementJson>,
    pub divisors: Option<Vec<String>>,
}

impl KernelReport {
    pub fn to_json(&self) -> KernelReportJson {
        let basis = match (&self.ring, &self.rational_basis) {
            (Ring::Rationals, Some(b)) => b.iter().map(LieElement::to_json).collect(),
            _ => self.basis.iter().map(LieElement::to_json).collect(),
        };
        KernelReportJson {
            n: self.n,
            degree: self.degree,
            domain_dim: self.domain_dim,
            image_rank: self.image_rank,
            kernel_dim: self.kernel_dim,
            basis,
            divisors: self.divisors.as_ref().map(|d| d.iter().map(ToString::to_string).collect()),
        }
    }
}

fn element_from_column<R: crate::Coeff>(
    alphabet: &std::sync::Arc<crate::freelie::Alphabet>,
    words: &[Word],
    degree: usize,
    v: &[R],
) -> LieElement<R> {
    let terms = words.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(w, c)| (w.clone(), c.clone()));
    LieElement::from_terms(alphabet, degree, terms).expect("Lyndon keys")
}

/// Dimension, rank and kernel basis of `tau` in degree `k`.
pub fn kernel_report(engine: &TauEngine, k: usize, opts: &KernelOptions) -> Result<KernelReport, JohnsonError> {
    if k == 0 {
        return Err(JohnsonError::DegreeZero);
    }
    if k > opts.degree_cap {
        return Err(JohnsonError::DegreeCap { degree: k, cap: opts.degree_cap });
    }
    let symbols = engine.symbols();
    let alphabet = symbols.alphabet();
    let words = lyndon_words(symbols.len(), k);
    let m = engine.matrix(k)?;
    let lattice = exactla::kernel_lattice(&m);
    for v in &lattice {
        // certificate: tau vanishes on every basis element
        if !m.annihilates(v) {
            return Err(JohnsonError::Linear("kernel vector fails re-evaluation".into()));
        }
    }
    let kernel_dim = lattice.len();
    let basis: Vec<LiePolynomial> = lattice.iter().map(|v| element_from_column(alphabet, &words, k, v)).collect();
    let rational_basis = (opts.ring == Ring::Rationals).then(|| {
        exactla::rational_kernel(&m)
            .into_iter()
            .map(|mut v| {
                if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
                    v.iter_mut().for_each(|x| *x = -x.clone());
                }
                element_from_column(alphabet, &words, k, &v)
            })
            .collect()
    });
    let divisors = if opts.divisors {
        Some(exactla::smith_normal_form(&m).map_err(|e| JohnsonError::Linear(e.to_string()))?.divisors)
    } else {
        None
    };
    Ok(KernelReport {
        n: symbols.n(),
        degree: k,
        ring: opts.ring,
        domain_dim: words.len(),
        image_rank: words.len() - kernel_dim,
        kernel_dim,
        basis,
        rational_basis,
        divisors,
    })
}

/// Map `symbols (x) ker_k -> ker_{k+1}`, `x (x) v -> [x, v]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketMapReport {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
    /// Every bracket lies in the next kernel.
    pub contained: bool,
}

fn coordinates(x: &LiePolynomial) -> SparseVec {
    let m = x.alphabet().size();
    let tw = tower(m, x.degree());
    let mut v: SparseVec = x.terms().map(|(w, c)| (tw.index_of(pack(w, m)).expect("Lyndon key"), c.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Rank of the bracket map from the kernel in degree `k` to the one in degree `k + 1`.
pub fn bracket_map_rank(lower: &KernelReport, upper: &KernelReport) -> Result<BracketMapReport, JohnsonError> {
    if upper.degree != lower.degree + 1 {
        return Err(JohnsonError::Linear("kernel reports must be in consecutive degrees".into()));
    }
    let alphabet = match (lower.basis.first(), upper.basis.first()) {
        (Some(v), _) | (None, Some(v)) => v.alphabet().clone(),
        (None, None) => {
            return Ok(BracketMapReport {
                degree: lower.degree,
                source_dim: 0,
                target_dim: 0,
                rank: 0,
                injective: true,
                surjective: true,
                contained: true,
            })
        }
    };
    let rows = tower(alphabet.size(), upper.degree).len();
    let mut images: Vec<SparseVec> = Vec::new();
    for l in 0..alphabet.size() {
        let x = LieElement::generator(&alphabet, l as u8);
        for v in &lower.basis {
            images.push(coordinates(&x.bracket_rewrite(v)));
        }
    }
    let target: Vec<SparseVec> = upper.basis.iter().map(coordinates).collect();
    let err = |e: exactla::ExactLaError| JohnsonError::Linear(e.to_string());
    let img = SparseMat::from_columns(rows, &images).map_err(err)?;
    let tgt = SparseMat::from_columns(rows, &target).map_err(err)?;
    let rank = exactla::rank(&img);
    let joint = exactla::rank(&SparseMat::hstack(&[&tgt, &img]).map_err(err)?);
    let source_dim = images.len();
    Ok(BracketMapReport {
        degree: lower.degree,
        source_dim,
        target_dim: upper.kernel_dim,
        rank,
        injective: rank == source_dim,
        surjective: rank == upper.kernel_dim,
        contained: joint == upper.kernel_dim,
    })
}
