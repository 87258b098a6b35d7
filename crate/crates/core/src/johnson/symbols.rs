use std::sync::Arc;

use super::{JohnsonError, LiePolynomial};
use crate::freelie::{Alphabet, Letter};

/// An ordered set of McCool symbols `k_ij`, each standing for `tau(k_ij) = d_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSet {
    n: usize,
    alphabet: Arc<Alphabet>,
    pairs: Vec<(usize, usize)>,
}

impl SymbolSet {
    /// `a = k12 < b = k21 < c = k13` over `L[3]`.
    pub fn abc() -> Self {
        SymbolSet { n: 3, alphabet: Arc::new(Alphabet::abc()), pairs: vec![(1, 2), (2, 1), (1, 3)] }
    }

    /// All `k_ij`, `i != j`, ordered by `(i, j)`; labels `k12` (or `k1_12` once n >= 10).
    pub fn mccool(n: usize) -> Self {
        assert!((2..=16).contains(&n), "McCool symbols are supported for 2 <= n <= 16");
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
        let labels = pairs.iter().map(|(i, j)| if n < 10 { format!("k{i}{j}") } else { format!("k{i}_{j}") });
        let alphabet = Arc::new(Alphabet::new(labels).expect("distinct labels"));
        SymbolSet { n, alphabet, pairs }
    }

    /// Arbitrary labelled symbols; `pairs[l]` is the `(i, j)` of letter `l`.
    pub fn custom(n: usize, alphabet: Arc<Alphabet>, pairs: Vec<(usize, usize)>) -> Result<Self, JohnsonError> {
        if pairs.len() != alphabet.size() {
            return Err(JohnsonError::Linear("one pair per symbol is required".into()));
        }
        for &(i, j) in &pairs {
            if i == j || i == 0 || j == 0 || i > n || j > n {
                return Err(JohnsonError::IndexError { n, i, j });
            }
        }
        Ok(SymbolSet { n, alphabet, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, l: Letter) -> (usize, usize) {
        self.pairs[usize::from(l)]
    }

    pub fn letter(&self, i: usize, j: usize) -> Option<Letter> {
        self.pairs.iter().position(|p| *p == (i, j)).map(|l| l as Letter)
    }

    pub(crate) fn check(&self, p: &LiePolynomial) -> Result<(), JohnsonError> {
        if p.alphabet() != &self.alphabet {
            return Err(JohnsonError::WrongAlphabet {
                expected: self.alphabet.labels().to_vec(),
                found: p.alphabet().labels().to_vec(),
            });
        }
        Ok(())
    }
}
