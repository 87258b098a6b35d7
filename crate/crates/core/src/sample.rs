//! Seeded random elements for property checks.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derivations::{generators, Derivation};
use crate::freelie::{lyndon_words, Alphabet, Letter, LieElement};

/// Deterministic sampler; equal seeds give equal streams.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Seed for case `case` of stream `stream`, so cases can run in any order.
    pub fn for_case(seed: u64, stream: u64, case: u64) -> Self {
        let mixed = seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ case.wrapping_mul(0xbf58_476d_1ce4_e5b9);
        Self::new(mixed)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coefficient(&mut self, bound: i64) -> i64 {
        loop {
            let c = self.rng.gen_range(-bound..=bound);
            if c != 0 {
                return c;
            }
        }
    }

    /// Up to `max_terms` random Lyndon basis elements of degree `k` with small coefficients.
    pub fn lie_element(&mut self, alphabet: &Arc<Alphabet>, k: usize, max_terms: usize) -> LieElement<BigInt> {
        let words = lyndon_words(alphabet.size(), k);
        let count = self.range(1, max_terms.min(words.len()));
        let mut out = LieElement::zero(alphabet, k);
        for w in words.choose_multiple(&mut self.rng, count) {
            let c = BigInt::from(self.coefficient(3));
            out.add_scaled(&LieElement::basis_element(alphabet, w).expect("Lyndon word"), &c);
        }
        out
    }

    /// Derivation of `L[n]` of degree `k` with random images.
    pub fn derivation(&mut self, n: usize, k: usize, max_terms: usize) -> Derivation {
        let xs = generators(n);
        let images = (0..n).map(|_| self.lie_element(&xs, k + 1, max_terms)).collect();
        Derivation::new(&xs, k, images).expect("homogeneous images")
    }

    /// Tangential derivation `X_i -> [X_i, W_i]` with random `W_i` of degree `k`.
    pub fn tangential(&mut self, n: usize, k: usize, max_terms: usize) -> Derivation {
        let xs = generators(n);
        let images = (0..n)
            .map(|i| LieElement::generator(&xs, i as Letter).bracket(&self.lie_element(&xs, k, max_terms)))
            .collect();
        Derivation::new(&xs, k, images).expect("homogeneous images")
    }

    /// `count` distinct values in `1..=n`.
    pub fn distinct(&mut self, n: usize, count: usize) -> Vec<usize> {
        let all: Vec<usize> = (1..=n).collect();
        all.choose_multiple(&mut self.rng, count).copied().collect()
    }

    /// Square matrix with determinant `±1`, built from elementary row operations.
    pub fn unimodular(&mut self, n: usize) -> Vec<Vec<i64>> {
        let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for _ in 0..2 * n {
            let (i, j) = (self.range(0, n - 1), self.range(0, n - 1));
            if i == j {
                continue;
            }
            let f = self.rng.gen_range(-2..=2);
            for k in 0..n {
                u[i][k] += f * u[j][k];
            }
        }
        u.shuffle(&mut self.rng);
        u
    }
}

impl Sampler {
    /// Element of `h x| g` of degree `k`; each part is zero with probability 1/4.
    pub fn sd_element(&mut self, k: usize, max_terms: usize) -> crate::psigma3::SdElement {
        use crate::psigma3::{inner_alphabet, SdElement};
        let abc = crate::johnson::SymbolSet::abc().alphabet().clone();
        let part = |s: &mut Self, alpha: &Arc<Alphabet>| {
            if s.range(0, 3) == 0 {
                LieElement::zero(alpha, k)
            } else {
                s.lie_element(alpha, k, max_terms)
            }
        };
        let h = part(self, &inner_alphabet());
        let g = part(self, &abc);
        SdElement::new(h, g).expect("matching parts")
    }
}
