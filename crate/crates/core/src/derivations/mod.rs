//! Derivations of the free Lie ring `L[n]`, stored by the images of the generators.

mod json;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::coeff::Coeff;
use crate::exactla::{self, SparseMat};
use crate::freelie::{lyndon_words, standard_split, Alphabet, FreeLieError, Letter, LieElement, TensorElement, Word};
use crate::packed::{Overflow, PackedDer, PackedTensor};

pub use json::DerivationJson;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DerivationError {
    #[error("derivations of degree 0 are not represented")]
    DegreeZero,
    #[error("expected {expected} images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of generator {index} has degree {found}, expected {expected}")]
    ImageDegree { index: usize, expected: usize, found: usize },
    #[error("images live over a different alphabet")]
    AlphabetMismatch,
    #[error("derivation is not tangential: {0}")]
    NotTangential(String),
    #[error("generator index out of range: ({i}, {j}) for n = {n}")]
    IndexError { n: usize, i: usize, j: usize },
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
}

/// The generator alphabet `X1 < ... < Xn`.
pub fn generators(n: usize) -> Arc<Alphabet> {
    Arc::new(Alphabet::numbered("X", n))
}

/// A derivation of degree `k >= 1`: generator `X_i` goes to `images[i]` in degree `k + 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Derivation<R: Coeff = BigInt> {
    alphabet: Arc<Alphabet>,
    degree: usize,
    images: Vec<LieElement<R>>,
}

impl<R: Coeff> std::fmt::Debug for Derivation<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for (i, img) in self.images.iter().enumerate() {
            m.entry(&self.alphabet.label(i as Letter), &format_args!("{img}"));
        }
        m.finish()
    }
}

impl<R: Coeff> Derivation<R> {
    pub fn new(alphabet: &Arc<Alphabet>, degree: usize, images: Vec<LieElement<R>>) -> Result<Self, DerivationError> {
        if degree == 0 {
            return Err(DerivationError::DegreeZero);
        }
        if images.len() != alphabet.size() {
            return Err(DerivationError::ImageCount { expected: alphabet.size(), found: images.len() });
        }
        for (index, img) in images.iter().enumerate() {
            if img.alphabet() != alphabet {
                return Err(DerivationError::AlphabetMismatch);
            }
            if img.degree() != degree + 1 {
                return Err(DerivationError::ImageDegree { index, expected: degree + 1, found: img.degree() });
            }
        }
        Ok(Derivation { alphabet: alphabet.clone(), degree, images })
    }

    pub fn zero(alphabet: &Arc<Alphabet>, degree: usize) -> Self {
        assert!(degree >= 1, "derivations of degree 0 are not represented");
        let images = vec![LieElement::zero(alphabet, degree + 1); alphabet.size()];
        Derivation { alphabet: alphabet.clone(), degree, images }
    }

    /// `d_ij` (1-based): `X_i -> [X_j, X_i]`, other generators to 0.
    pub fn elementary(alphabet: &Arc<Alphabet>, i: usize, j: usize) -> Result<Self, DerivationError> {
        let n = alphabet.size();
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(DerivationError::IndexError { n, i, j });
        }
        let xi = LieElement::generator(alphabet, (i - 1) as Letter);
        let xj = LieElement::generator(alphabet, (j - 1) as Letter);
        let mut d = Self::zero(alphabet, 1);
        d.images[i - 1] = xj.bracket_rewrite(&xi);
        Ok(d)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn n(&self) -> usize {
        self.alphabet.size()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[LieElement<R>] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &LieElement<R> {
        &self.images[i]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(LieElement::is_zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        let images = self.images.iter().map(|x| x.scale(c)).collect();
        Derivation { alphabet: self.alphabet.clone(), degree: self.degree, images }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        assert!(self.alphabet == other.alphabet && self.degree == other.degree, "incompatible derivations");
        for (a, b) in self.images.iter_mut().zip(&other.images) {
            a.add_scaled(b, c);
        }
    }

    fn apply_basis(&self, w: &[Letter], memo: &mut HashMap<Word, LieElement<R>>) -> LieElement<R> {
        if let Some(x) = memo.get(w) {
            return x.clone();
        }
        let out = match standard_split(w) {
            None => self.images[usize::from(w[0])].clone(),
            Some(i) => {
                let pu = LieElement::basis_element(&self.alphabet, &w[..i]).expect("Lyndon factor");
                let pv = LieElement::basis_element(&self.alphabet, &w[i..]).expect("Lyndon factor");
                let du = self.apply_basis(&w[..i], memo);
                let dv = self.apply_basis(&w[i..], memo);
                du.bracket_rewrite(&pv) + pu.bracket_rewrite(&dv)
            }
        };
        memo.insert(Word::from_slice(w), out.clone());
        out
    }

    /// `d(u)`, by the Leibniz rule along the standard bracketing of each basis element.
    pub fn apply(&self, u: &LieElement<R>) -> LieElement<R> {
        assert!(u.alphabet() == &self.alphabet, "element lives over a different alphabet");
        assert!(u.degree() >= 1, "elements of degree 0 are not in the free Lie ring");
        let mut memo = HashMap::new();
        let mut out = LieElement::zero(&self.alphabet, u.degree() + self.degree);
        for (w, c) in u.terms() {
            out.add_scaled(&self.apply_basis(w, &mut memo), c);
        }
        out
    }

    /// `d` on the tensor ring: each letter is replaced in turn by its image.
    pub fn apply_tensor(&self, t: &TensorElement<R>) -> TensorElement<R> {
        let images: Vec<TensorElement<R>> = self.images.iter().map(LieElement::to_tensor).collect();
        let mut out = TensorElement::zero(&self.alphabet, t.degree() + self.degree);
        for (w, c) in t.terms() {
            for p in 0..w.len() {
                let img = &images[usize::from(w[p])];
                let pre = TensorElement::monomial(&self.alphabet, &w[..p], c.clone());
                let post = TensorElement::monomial(&self.alphabet, &w[p + 1..], R::one());
                out = out + pre.mul(img).mul(&post);
            }
        }
        out
    }

    /// `[d, e](x) = d(e(x)) - e(d(x))`.
    pub fn bracket(&self, other: &Self) -> Self {
        assert!(self.alphabet == other.alphabet, "derivations of different rings");
        let images = self.images.iter().zip(&other.images).map(|(di, ei)| self.apply(ei) - other.apply(di)).collect();
        Derivation { alphabet: self.alphabet.clone(), degree: self.degree + other.degree, images }
    }

    /// `x -> [w, x]`, of degree `deg w`.
    pub fn inner(w: &LieElement<R>) -> Self {
        let alphabet = w.alphabet().clone();
        let images =
            (0..alphabet.size()).map(|i| w.bracket_rewrite(&LieElement::generator(&alphabet, i as Letter))).collect();
        Derivation { alphabet, degree: w.degree(), images }
    }

    /// Elements `W_i` with `d(X_i) = [X_i, W_i]`.
    ///
    /// For degree 1 the coefficient of `X_i` in `W_i` is set to 0; in higher degrees the
    /// witness is unique.
    pub fn tangential_witness(&self) -> Result<Vec<LieElement<R>>, DerivationError> {
        let n = self.n();
        let k = self.degree;
        let domain = lyndon_words(n, k);
        let target = lyndon_words(n, k + 1);
        let target_index: HashMap<&Word, usize> = target.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut out = Vec::with_capacity(n);
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                out.push(LieElement::zero(&self.alphabet, k));
                continue;
            }
            // W_i only needs the letter contents of the image, minus X_i
            let contents: BTreeSet<Vec<usize>> = img.terms().map(|(w, _)| content(w, n)).collect();
            let cols: Vec<&Word> = domain
                .iter()
                .filter(|w| {
                    let mut c = content(w, n);
                    c[i] += 1;
                    contents.contains(&c) && !(k == 1 && usize::from(w[0]) == i)
                })
                .collect();
            let xi = LieElement::<BigInt>::generator(&self.alphabet, i as Letter);
            let mut entries = Vec::new();
            for (col, w) in cols.iter().enumerate() {
                let b = xi.bracket_rewrite(&LieElement::basis_element(&self.alphabet, w)?);
                for (v, c) in b.terms() {
                    entries.push((target_index[v], col, c.clone()));
                }
            }
            let m = SparseMat::from_triplets(target.len(), cols.len(), entries).expect("indices in range");
            // clear denominators of the right-hand side
            let rhs_q: Vec<(usize, BigRational)> =
                img.terms().map(|(w, c)| (target_index[w], c.to_rational())).collect();
            let den = rhs_q.iter().fold(BigInt::from(1), |l, (_, c)| num_integer::lcm(l, c.denom().clone()));
            let mut rhs = vec![BigInt::zero(); target.len()];
            for (r, c) in &rhs_q {
                rhs[*r] = (c * BigRational::from_integer(den.clone())).to_integer();
            }
            let Some(x) = exactla::solve(&m, &rhs).expect("dimensions agree") else {
                return Err(DerivationError::NotTangential(format!(
                    "image of {} is not of the form [{0}, W]",
                    self.alphabet.label(i as Letter)
                )));
            };
            let den = BigRational::from_integer(den);
            let mut terms = Vec::new();
            for (w, v) in cols.iter().zip(x) {
                if v.is_zero() {
                    continue;
                }
                let v = v / &den;
                let c = R::from_rational(&v).ok_or_else(|| {
                    DerivationError::NotTangential(format!("witness coefficient {v} is not in the ring"))
                })?;
                terms.push(((*w).clone(), c));
            }
            out.push(LieElement::from_terms(&self.alphabet, k, terms)?);
        }
        Ok(out)
    }
}

fn content(w: &[Letter], n: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for l in w {
        c[usize::from(*l)] += 1;
    }
    c
}

impl Derivation<BigInt> {
    pub fn to_packed(&self) -> Result<PackedDer, Overflow> {
        let images = self.images.iter().map(PackedTensor::from_lie).collect::<Result<Vec<_>, _>>()?;
        Ok(PackedDer { degree: self.degree, images })
    }

    pub fn from_packed(alphabet: &Arc<Alphabet>, d: &PackedDer) -> Result<Self, DerivationError> {
        let images = d
            .images
            .iter()
            .map(|t| if t.is_zero() { Ok(LieElement::zero(alphabet, d.degree + 1)) } else { t.to_lie(alphabet) })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(alphabet, d.degree, images)
    }

    pub fn to_rationals(&self) -> Derivation<BigRational> {
        Derivation {
            alphabet: self.alphabet.clone(),
            degree: self.degree,
            images: self.images.iter().map(LieElement::to_rationals).collect(),
        }
    }

    /// Largest absolute coefficient over all images.
    pub fn max_coefficient(&self) -> BigInt {
        self.images.iter().flat_map(|x| x.terms().map(|(_, c)| c.abs())).max().unwrap_or_default()
    }
}

impl<R: Coeff> std::ops::Add for Derivation<R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, &R::one());
        self
    }
}

impl<R: Coeff> std::ops::Sub for Derivation<R> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, &-R::one());
        self
    }
}
