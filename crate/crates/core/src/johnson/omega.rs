use std::sync::Arc;

use num_bigint::BigInt;

use super::LiePolynomial;
use crate::freelie::{left_normed, Alphabet, LieElement};

/// The twelve left-normed terms of `omega` over `{a, b, c}`, with signs.
pub fn omega_terms() -> [(i64, &'static str); 12] {
    [
        (1, "cabbac"),
        (1, "cacbab"),
        (1, "cbacab"),
        (1, "cbacba"),
        (1, "cbbaac"),
        (1, "cbcbaa"),
        (-1, "cacabb"),
        (-1, "cacbba"),
        (-1, "cbaacb"),
        (-1, "cbabac"),
        (-1, "cbbaca"),
        (-1, "cbcaba"),
    ]
}

/// `omega`, in Lyndon normal form over `a < b < c`.
pub fn omega() -> LiePolynomial {
    left_normed_sum(&omega_terms())
}

/// Signed sum of left-normed brackets of equal length over `a, b, c`.
pub fn left_normed_sum(terms: &[(i64, &str)]) -> LiePolynomial {
    let alpha = Arc::new(Alphabet::abc());
    let mut out = LieElement::zero(&alpha, terms.first().map_or(1, |t| t.1.len()));
    for &(sign, word) in terms {
        let gens: Vec<LiePolynomial> =
            alpha.parse_word(word).expect("letters of abc").iter().map(|l| LieElement::generator(&alpha, *l)).collect();
        out.add_scaled(&left_normed(&gens), &BigInt::from(sign));
    }
    out
}
