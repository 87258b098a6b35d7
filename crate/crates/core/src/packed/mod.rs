//! Tensors with words packed into `u64` (base-`n` digits, first letter most
//! significant, so numeric order is lexicographic order within one degree) and
//! `i64` coefficients. Every arithmetic step is checked; callers get
//! [`Overflow`] instead of a wrong answer.

mod tower;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::freelie::{Alphabet, LieElement, TensorElement, Word};

pub use tower::{tower, LyndonTower};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("coefficient overflow in machine-integer arithmetic")]
pub struct Overflow;

pub(crate) fn pow(n: usize, d: usize) -> u64 {
    (n as u64).checked_pow(d as u32).expect("packed word does not fit in 64 bits")
}

/// Largest degree whose words fit in a `u64` over `n` letters.
pub fn max_degree(n: usize) -> usize {
    let mut d = 0;
    while (n as u64).checked_pow(d as u32 + 1).is_some() {
        d += 1;
    }
    d
}

pub fn pack(w: &[u8], n: usize) -> u64 {
    w.iter().fold(0u64, |acc, l| acc * n as u64 + u64::from(*l))
}

pub fn unpack(mut x: u64, n: usize, degree: usize) -> Word {
    let mut w = Word::from_elem(0, degree);
    for i in (0..degree).rev() {
        w[i] = (x % n as u64) as u8;
        x /= n as u64;
    }
    w
}

/// Sorts by word and sums duplicates, dropping zeros.
pub(crate) fn consolidate(mut v: Vec<(u64, i64)>) -> Result<Vec<(u64, i64)>, Overflow> {
    v.sort_unstable_by_key(|(w, _)| *w);
    let mut out: Vec<(u64, i64)> = Vec::with_capacity(v.len());
    for (w, c) in v {
        match out.last_mut() {
            Some((x, y)) if *x == w => *y = y.checked_add(c).ok_or(Overflow)?,
            _ => {
                if let Some((_, 0)) = out.last() {
                    out.pop();
                }
                out.push((w, c));
            }
        }
    }
    if let Some((_, 0)) = out.last() {
        out.pop();
    }
    Ok(out)
}

/// Homogeneous tensor over `n` letters.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PackedTensor {
    pub degree: usize,
    /// Sorted by word, no zero coefficients.
    pub terms: Vec<(u64, i64)>,
}

impl PackedTensor {
    pub fn zero(degree: usize) -> Self {
        PackedTensor { degree, terms: Vec::new() }
    }

    pub fn letter(l: u8) -> Self {
        PackedTensor { degree: 1, terms: vec![(u64::from(l), 1)] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_tensor(t: &TensorElement<BigInt>) -> Result<Self, Overflow> {
        let n = t.alphabet().size();
        let terms =
            t.terms().map(|(w, c)| Ok((pack(w, n), c.to_i64().ok_or(Overflow)?))).collect::<Result<Vec<_>, _>>()?;
        Ok(PackedTensor { degree: t.degree(), terms: consolidate(terms)? })
    }

    pub fn from_lie(x: &LieElement<BigInt>) -> Result<Self, Overflow> {
        let n = x.alphabet().size();
        let tw = tower(n, x.degree());
        let mut acc = Vec::new();
        for (w, c) in x.terms() {
            let c = c.to_i64().ok_or(Overflow)?;
            let idx = tw.index_of(pack(w, n)).expect("Lie keys are Lyndon");
            for (v, e) in &tw.expansions[idx] {
                acc.push((*v, c.checked_mul(*e).ok_or(Overflow)?));
            }
        }
        Ok(PackedTensor { degree: x.degree(), terms: consolidate(acc)? })
    }

    pub fn to_tensor(&self, alphabet: &Arc<Alphabet>) -> TensorElement<BigInt> {
        let n = alphabet.size();
        TensorElement::from_terms(
            alphabet,
            self.degree,
            self.terms.iter().map(|(w, c)| (unpack(*w, n, self.degree), BigInt::from(*c))),
        )
        .expect("packed words are valid")
    }

    /// Reads the Lie element with this tensor image, assuming there is one.
    pub fn to_lie(&self, alphabet: &Arc<Alphabet>) -> Result<LieElement<BigInt>, Overflow> {
        let n = alphabet.size();
        let coords = tower(n, self.degree).lie_coordinates(self)?;
        let tw = tower(n, self.degree);
        let terms = coords.into_iter().map(|(i, c)| (unpack(tw.words[i], n, self.degree), BigInt::from(c)));
        Ok(LieElement::from_terms(alphabet, self.degree, terms).expect("Lyndon keys"))
    }

    pub fn add_scaled(&self, other: &Self, c: i64) -> Result<Self, Overflow> {
        if other.is_zero() || c == 0 {
            return Ok(self.clone());
        }
        if self.is_zero() {
            let terms = other
                .terms
                .iter()
                .map(|(w, x)| Ok((*w, x.checked_mul(c).ok_or(Overflow)?)))
                .collect::<Result<_, _>>()?;
            return Ok(PackedTensor { degree: other.degree, terms });
        }
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut acc = self.terms.clone();
        for (w, x) in &other.terms {
            acc.push((*w, x.checked_mul(c).ok_or(Overflow)?));
        }
        Ok(PackedTensor { degree: self.degree, terms: consolidate(acc)? })
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Self, n: usize) -> Result<Self, Overflow> {
        let degree = self.degree + other.degree;
        let (sx, sy) = (pow(n, other.degree), pow(n, self.degree));
        let mut acc = Vec::with_capacity(2 * self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca.checked_mul(*cb).ok_or(Overflow)?;
                acc.push((a * sx + b, c));
                acc.push((b * sy + a, -c));
            }
        }
        Ok(PackedTensor { degree, terms: consolidate(acc)? })
    }

    /// Letter counts of a packed word.
    pub fn letter_content(word: u64, n: usize, degree: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        let mut x = word;
        for _ in 0..degree {
            c[(x % n as u64) as usize] += 1;
            x /= n as u64;
        }
        c
    }
}

/// Derivation of the tensor ring determined by the images of the letters,
/// all of degree `degree + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedDer {
    pub degree: usize,
    pub images: Vec<PackedTensor>,
}

impl PackedDer {
    pub fn zero(n: usize, degree: usize) -> Self {
        PackedDer { degree, images: vec![PackedTensor::zero(degree + 1); n] }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(PackedTensor::is_zero)
    }

    pub fn apply(&self, t: &PackedTensor) -> Result<PackedTensor, Overflow> {
        let n = self.n();
        let len = t.degree;
        let img_deg = self.degree + 1;
        let grow = pow(n, img_deg);
        let mut acc = Vec::new();
        for (w, c) in &t.terms {
            for p in 0..len {
                let tail = pow(n, len - 1 - p);
                let letter = ((w / tail) % n as u64) as usize;
                let img = &self.images[letter];
                if img.is_zero() {
                    continue;
                }
                let prefix = w / (tail * n as u64);
                let suffix = w % tail;
                for (iw, ic) in &img.terms {
                    let word = (prefix * grow + iw) * tail + suffix;
                    acc.push((word, c.checked_mul(*ic).ok_or(Overflow)?));
                }
            }
        }
        Ok(PackedTensor { degree: len + self.degree, terms: consolidate(acc)? })
    }

    /// `[d, e](x) = d(e(x)) - e(d(x))`.
    pub fn bracket(&self, other: &Self) -> Result<Self, Overflow> {
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(di, ei)| self.apply(ei)?.add_scaled(&other.apply(di)?, -1))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PackedDer { degree: self.degree + other.degree, images })
    }

    /// `x -> [w, x]`.
    pub fn inner(w: &PackedTensor, n: usize) -> Result<Self, Overflow> {
        let images = (0..n).map(|i| w.commutator(&PackedTensor::letter(i as u8), n)).collect::<Result<Vec<_>, _>>()?;
        Ok(PackedDer { degree: w.degree, images })
    }

    pub fn add_scaled(&self, other: &Self, c: i64) -> Result<Self, Overflow> {
        let images =
            self.images.iter().zip(&other.images).map(|(a, b)| a.add_scaled(b, c)).collect::<Result<Vec<_>, _>>()?;
        Ok(PackedDer { degree: self.degree.max(other.degree), images })
    }
}

#[cfg(test)]
mod tests;
