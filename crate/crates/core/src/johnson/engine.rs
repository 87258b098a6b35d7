use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{JohnsonError, LiePolynomial, SymbolSet};
use crate::derivations::{generators, Derivation};
use crate::exactla::SparseMat;
use crate::freelie::{lyndon_words, standard_split, Word};
use crate::packed::{tower, Overflow, PackedDer, PackedTensor};

/// Evaluates `tau` on Lyndon basis elements, caching `tau(P_w)` for every word
/// it has been asked to store.
pub struct TauEngine {
    symbols: SymbolSet,
    memo: RwLock<HashMap<Word, Arc<PackedDer>>>,
}

impl TauEngine {
    pub fn new(symbols: SymbolSet) -> Self {
        TauEngine { symbols, memo: RwLock::new(HashMap::new()) }
    }

    pub fn symbols(&self) -> &SymbolSet {
        &self.symbols
    }

    fn generator(&self, l: u8) -> Result<PackedDer, Overflow> {
        let n = self.symbols.n();
        let (i, j) = self.symbols.pair(l);
        let mut d = PackedDer::zero(n, 1);
        d.images[i - 1] = PackedTensor::letter((j - 1) as u8).commutator(&PackedTensor::letter((i - 1) as u8), n)?;
        Ok(d)
    }

    fn cached(&self, w: &[u8]) -> Option<Arc<PackedDer>> {
        self.memo.read().expect("tau memo").get(w).cloned()
    }

    /// `tau(P_w)` for a Lyndon word `w`; stored when `store` is set.
    pub fn basis_image(&self, w: &[u8], store: bool) -> Result<Arc<PackedDer>, Overflow> {
        if let Some(d) = self.cached(w) {
            return Ok(d);
        }
        let d = Arc::new(match standard_split(w) {
            None => self.generator(w[0])?,
            Some(s) => self.basis_image(&w[..s], true)?.bracket(&*self.basis_image(&w[s..], true)?)?,
        });
        if store {
            self.memo.write().expect("tau memo").insert(Word::from_slice(w), d.clone());
        }
        Ok(d)
    }

    /// Fills the cache for every Lyndon word of degree `< degree`.
    pub fn prepare(&self, degree: usize) -> Result<(), Overflow> {
        let m = self.symbols.len();
        for d in 1..degree {
            let words = lyndon_words(m, d);
            let done: Vec<(Word, Arc<PackedDer>)> = words
                .par_iter()
                .filter(|w| self.cached(w).is_none())
                .map(|w| self.basis_image(w, false).map(|x| (w.clone(), x)))
                .collect::<Result<_, _>>()?;
            let mut memo = self.memo.write().expect("tau memo");
            for (w, x) in done {
                memo.insert(w, x);
            }
        }
        Ok(())
    }

    /// Packed `tau(p)`.
    pub fn evaluate_packed(&self, p: &LiePolynomial) -> Result<PackedDer, JohnsonError> {
        self.symbols.check(p)?;
        let n = self.symbols.n();
        let mut out = PackedDer::zero(n, p.degree());
        for (w, c) in p.terms() {
            let c = c.to_i64().ok_or(Overflow)?;
            out = out.add_scaled(&*self.basis_image(w, false)?, c)?;
        }
        Ok(out)
    }

    pub fn evaluate(&self, p: &LiePolynomial) -> Result<Derivation, JohnsonError> {
        if p.degree() == 0 {
            return Err(JohnsonError::DegreeZero);
        }
        let d = self.evaluate_packed(p)?;
        Ok(Derivation::from_packed(&generators(self.symbols.n()), &d)?)
    }

    /// Matrix of `tau` on the degree-`k` Lyndon basis. Column `c` is the `c`-th Lyndon word;
    /// row `i * L + r` is the coefficient of the `r`-th Lyndon word of degree `k + 1`
    /// in the image of `X_{i+1}`, where `L` is the number of such words.
    pub fn matrix(&self, k: usize) -> Result<SparseMat, JohnsonError> {
        self.prepare(k)?;
        let n = self.symbols.n();
        let words = lyndon_words(self.symbols.len(), k);
        let target = tower(n, k + 1);
        let rows = n * target.len();
        let columns: Vec<Vec<(usize, BigInt)>> = words
            .par_iter()
            .map(|w| {
                let d = self.basis_image(w, false)?;
                let mut col = Vec::new();
                for (i, img) in d.images.iter().enumerate() {
                    for (r, c) in target.lie_coordinates(img)? {
                        col.push((i * target.len() + r, BigInt::from(c)));
                    }
                }
                Ok(col)
            })
            .collect::<Result<_, Overflow>>()?;
        SparseMat::from_columns(rows, &columns).map_err(|e| JohnsonError::Linear(e.to_string()))
    }
}
