use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{consolidate, pack, pow, Overflow, PackedTensor};
use crate::freelie::{lyndon_words, standard_split};

/// Lyndon basis of one degree over `n` letters with packed tensor expansions.
pub struct LyndonTower {
    pub n: usize,
    pub degree: usize,
    /// Packed Lyndon words, increasing.
    pub words: Vec<u64>,
    /// Expansion of each basis element; its first term is the word itself with coefficient 1.
    pub expansions: Vec<Vec<(u64, i64)>>,
    /// For each basis element, the other Lyndon words in its expansion (by index).
    upper: Vec<Vec<(usize, i64)>>,
}

type Cache = Mutex<HashMap<(usize, usize), Arc<LyndonTower>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared tower for `(n, degree)`, built on first use.
pub fn tower(n: usize, degree: usize) -> Arc<LyndonTower> {
    if let Some(t) = cache().lock().expect("tower cache").get(&(n, degree)) {
        return t.clone();
    }
    // lower degrees first, outside the lock
    let lower: Vec<Arc<LyndonTower>> = (1..degree).map(|d| tower(n, d)).collect();
    let built = Arc::new(LyndonTower::build(n, degree, &lower));
    cache().lock().expect("tower cache").entry((n, degree)).or_insert(built).clone()
}

impl LyndonTower {
    fn build(n: usize, degree: usize, lower: &[Arc<LyndonTower>]) -> Self {
        let words_raw = lyndon_words(n, degree);
        let words: Vec<u64> = words_raw.iter().map(|w| pack(w, n)).collect();
        let expansions: Vec<Vec<(u64, i64)>> = words_raw
            .iter()
            .zip(&words)
            .map(|(w, packed)| match standard_split(w) {
                None => vec![(*packed, 1)],
                Some(i) => {
                    let (lu, lv) = (i, degree - i);
                    let u = &lower[lu - 1];
                    let v = &lower[lv - 1];
                    let eu = &u.expansions[u.index_of(pack(&w[..i], n)).expect("left factor")];
                    let ev = &v.expansions[v.index_of(pack(&w[i..], n)).expect("right factor")];
                    let (su, sv) = (pow(n, lu), pow(n, lv));
                    let mut acc = Vec::with_capacity(2 * eu.len() * ev.len());
                    for (a, ca) in eu {
                        for (b, cb) in ev {
                            acc.push((a * sv + b, ca * cb));
                            acc.push((b * su + a, -ca * cb));
                        }
                    }
                    consolidate(acc).expect("structure constants fit in i64")
                }
            })
            .collect();
        let index: HashMap<u64, usize> = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let upper = expansions
            .iter()
            .map(|e| {
                debug_assert_eq!(e[0].1, 1);
                e[1..].iter().filter_map(|(w, c)| index.get(w).map(|i| (*i, *c))).collect()
            })
            .collect();
        LyndonTower { n, degree, words, expansions, upper }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, word: u64) -> Option<usize> {
        self.words.binary_search(&word).ok()
    }

    /// Lyndon-basis coordinates of a Lie element given by its tensor image.
    ///
    /// Only the coefficients on Lyndon words are read: the expansion matrix restricted to
    /// Lyndon words is unitriangular. Use [`LyndonTower::is_lie`] when `t` is not known to be Lie.
    pub fn lie_coordinates(&self, t: &PackedTensor) -> Result<Vec<(usize, i64)>, Overflow> {
        assert_eq!(t.degree, self.degree, "degree mismatch");
        let mut residual = vec![0i64; self.len()];
        let mut any = false;
        for (w, c) in &t.terms {
            if let Some(i) = self.index_of(*w) {
                residual[i] = *c;
                any = true;
            }
        }
        let mut out = Vec::new();
        if !any {
            return Ok(out);
        }
        for i in 0..self.len() {
            let c = residual[i];
            if c == 0 {
                continue;
            }
            out.push((i, c));
            for (j, e) in &self.upper[i] {
                let d = c.checked_mul(*e).ok_or(Overflow)?;
                residual[*j] = residual[*j].checked_sub(d).ok_or(Overflow)?;
            }
        }
        Ok(out)
    }

    /// Tensor image of a combination of basis elements.
    pub fn expand(&self, coords: &[(usize, i64)]) -> Result<PackedTensor, Overflow> {
        let mut acc = Vec::new();
        for (i, c) in coords {
            for (w, e) in &self.expansions[*i] {
                acc.push((*w, c.checked_mul(*e).ok_or(Overflow)?));
            }
        }
        Ok(PackedTensor { degree: self.degree, terms: consolidate(acc)? })
    }

    /// `true` when `t` is the tensor image of a Lie element.
    pub fn is_lie(&self, t: &PackedTensor) -> Result<bool, Overflow> {
        let coords = self.lie_coordinates(t)?;
        Ok(self.expand(&coords)? == *t)
    }
}
