use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::freelie::{lyndon_words, Alphabet, LieElement};

fn random_lie(alpha: &Arc<Alphabet>, degree: usize, picks: &[(usize, i64)]) -> LieElement<BigInt> {
    let words = lyndon_words(alpha.size(), degree);
    let mut x = LieElement::zero(alpha, degree);
    for (i, c) in picks {
        let w = &words[i % words.len()];
        x = x + LieElement::basis_element(alpha, w).unwrap().scale(&BigInt::from(*c));
    }
    x
}

#[test]
fn towers_match_witt_dimensions() {
    for (d, expect) in [(1, 3), (2, 3), (3, 8), (6, 116), (9, 2184)] {
        assert_eq!(tower(3, d).len(), expect);
    }
    assert_eq!(max_degree(3), 40);
}

#[test]
fn packing_is_order_preserving() {
    let n = 3;
    let words = lyndon_words(n, 5);
    let packed: Vec<u64> = words.iter().map(|w| pack(w, n)).collect();
    assert!(packed.windows(2).all(|p| p[0] < p[1]));
    for (w, p) in words.iter().zip(&packed) {
        assert_eq!(&unpack(*p, n, 5), w);
    }
}

#[test]
fn overflow_is_reported() {
    let big = PackedTensor { degree: 1, terms: vec![(0, i64::MAX)] };
    assert_eq!(big.add_scaled(&big, 1), Err(Overflow));
    assert_eq!(big.commutator(&PackedTensor { degree: 1, terms: vec![(1, 2)] }, 3), Err(Overflow));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn round_trips_through_lie_coordinates(
        n in 2usize..4,
        degree in 1usize..8,
        picks in prop::collection::vec((0usize..1000, -5i64..=5), 0..6),
    ) {
        let alpha = Arc::new(Alphabet::numbered("X", n));
        let x = random_lie(&alpha, degree, &picks);
        let p = PackedTensor::from_lie(&x).unwrap();
        prop_assert_eq!(&p, &PackedTensor::from_tensor(&x.to_tensor()).unwrap());
        prop_assert_eq!(p.to_lie(&alpha).unwrap(), x);
        prop_assert!(tower(n, degree).is_lie(&p).unwrap());
    }

    #[test]
    fn commutator_matches_lie_bracket(
        d1 in 1usize..5,
        d2 in 1usize..5,
        p1 in prop::collection::vec((0usize..1000, -3i64..=3), 1..4),
        p2 in prop::collection::vec((0usize..1000, -3i64..=3), 1..4),
    ) {
        let alpha = Arc::new(Alphabet::abc());
        let x = random_lie(&alpha, d1, &p1);
        let y = random_lie(&alpha, d2, &p2);
        let c = PackedTensor::from_lie(&x).unwrap().commutator(&PackedTensor::from_lie(&y).unwrap(), 3).unwrap();
        prop_assert_eq!(c.to_lie(&alpha).unwrap(), x.bracket_rewrite(&y));
    }

    #[test]
    fn non_lie_tensors_are_detected(word in 0u64..81) {
        // a single word of length >= 2 is never a Lie element
        let t = PackedTensor { degree: 4, terms: vec![(word, 1)] };
        prop_assert!(!tower(3, 4).is_lie(&t).unwrap());
    }
}
