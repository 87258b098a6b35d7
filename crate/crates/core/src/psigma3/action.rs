use std::collections::HashMap;
use std::sync::Arc;

use super::{inner_alphabet, PsigmaError, SdElement};
use crate::freelie::{standard_split, Word};
use crate::johnson::{LiePolynomial, SymbolSet, TauEngine};
use crate::packed::{tower, unpack, Overflow, PackedDer, PackedTensor};
use crate::symmetry::{kappa_class, permute_x, S3Element};

/// Packed `(h, g)` together with `tau(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdPacked {
    pub h: PackedTensor,
    pub g: PackedTensor,
    pub g_tau: PackedDer,
}

impl SdPacked {
    pub fn zero(degree: usize) -> Self {
        SdPacked { h: PackedTensor::zero(degree), g: PackedTensor::zero(degree), g_tau: PackedDer::zero(3, degree) }
    }

    pub fn degree(&self) -> usize {
        self.g.degree
    }

    pub fn from_g(g: &LiePolynomial) -> Result<Self, PsigmaError> {
        let g_tau = TauEngine::new(SymbolSet::abc()).evaluate_packed(g)?;
        Ok(SdPacked { h: PackedTensor::zero(g.degree()), g: PackedTensor::from_lie(g)?, g_tau })
    }

    pub fn from_element(u: &SdElement) -> Result<Self, PsigmaError> {
        let mut out = Self::from_g(u.g())?;
        out.h = PackedTensor::from_lie(u.h())?;
        Ok(out)
    }

    pub fn to_element(&self) -> Result<SdElement, PsigmaError> {
        let k = self.degree();
        let h = if self.h.is_zero() {
            crate::freelie::LieElement::zero(&inner_alphabet(), k)
        } else {
            self.h.to_lie(&inner_alphabet())?
        };
        let abc = SymbolSet::abc().alphabet().clone();
        let g = if self.g.is_zero() { crate::freelie::LieElement::zero(&abc, k) } else { self.g.to_lie(&abc)? };
        SdElement::new(h, g)
    }

    /// Bracket of the semidirect product; `tau(g)` follows along.
    pub fn bracket(&self, other: &Self) -> Result<Self, Overflow> {
        let h = self
            .h
            .commutator(&other.h, 3)?
            .add_scaled(&self.g_tau.apply(&other.h)?, 1)?
            .add_scaled(&other.g_tau.apply(&self.h)?, -1)?;
        Ok(SdPacked { h, g: self.g.commutator(&other.g, 3)?, g_tau: self.g_tau.bracket(&other.g_tau)? })
    }

    pub fn add_scaled(&self, other: &Self, c: i64) -> Result<Self, Overflow> {
        Ok(SdPacked {
            h: self.h.add_scaled(&other.h, c)?,
            g: self.g.add_scaled(&other.g, c)?,
            g_tau: self.g_tau.add_scaled(&other.g_tau, c)?,
        })
    }

    /// `ad(h) + tau(g)`.
    pub fn tau(&self) -> Result<PackedDer, Overflow> {
        PackedDer::inner(&self.h, 3)?.add_scaled(&self.g_tau, 1)
    }
}

/// The action of one group element, memoized on Lyndon words over `a, b, c`.
pub struct S3Action {
    sigma: S3Element,
    engine: TauEngine,
    memo: HashMap<Word, Arc<SdPacked>>,
}

impl S3Action {
    pub fn new(sigma: S3Element) -> Self {
        S3Action { sigma, engine: TauEngine::new(SymbolSet::abc()), memo: HashMap::new() }
    }

    fn generator(&self, l: u8) -> Result<SdPacked, Overflow> {
        let (i, j) = SymbolSet::abc().pair(l);
        let (m, sign, letter) = kappa_class(self.sigma.apply(i), self.sigma.apply(j));
        let mut out = SdPacked::zero(1);
        if let Some(m) = m {
            out.h = PackedTensor::letter((m - 1) as u8);
        }
        out.g = PackedTensor { degree: 1, terms: vec![(u64::from(letter), sign)] };
        let d = self.engine.basis_image(&[letter], false)?;
        out.g_tau = PackedDer::zero(3, 1).add_scaled(&d, sign)?;
        Ok(out)
    }

    /// `sigma . (0, P_w)` for a Lyndon word `w`.
    pub fn basis_image(&mut self, w: &[u8]) -> Result<Arc<SdPacked>, Overflow> {
        if let Some(x) = self.memo.get(w) {
            return Ok(x.clone());
        }
        let out = Arc::new(match standard_split(w) {
            None => self.generator(w[0])?,
            Some(s) => {
                let u = self.basis_image(&w[..s])?;
                let v = self.basis_image(&w[s..])?;
                u.bracket(&v)?
            }
        });
        self.memo.insert(Word::from_slice(w), out.clone());
        Ok(out)
    }

    pub fn apply(&mut self, u: &SdPacked) -> Result<SdPacked, Overflow> {
        let k = u.degree();
        let mut out = SdPacked::zero(k);
        out.h = permute_x(&self.sigma, &u.h)?;
        if !u.g.is_zero() {
            let tw = tower(3, k);
            for (i, c) in tw.lie_coordinates(&u.g)? {
                let w = unpack(tw.words[i], 3, k);
                out = out.add_scaled(&*self.basis_image(&w)?, c)?;
            }
        }
        Ok(out)
    }
}

pub fn sd_s3_action_packed(sigma: &S3Element, u: &SdPacked) -> Result<SdPacked, Overflow> {
    S3Action::new(*sigma).apply(u)
}
