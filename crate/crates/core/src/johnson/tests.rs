use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::derivations::generators;
use crate::freelie::{lyndon_words, Alphabet, LieElement};

fn abc() -> Arc<Alphabet> {
    SymbolSet::abc().alphabet().clone()
}

fn gen(l: &str) -> LiePolynomial {
    let a = abc();
    LieElement::generator(&a, a.letter(l).unwrap())
}

// left-normed brackets expanded straight in the tensor ring, no Lyndon machinery
fn left_normed_tensor(word: &str) -> BTreeMap<String, i64> {
    let mut acc: BTreeMap<String, i64> = BTreeMap::new();
    let mut chars = word.chars();
    acc.insert(chars.next().unwrap().to_string(), 1);
    for x in chars {
        let mut next = BTreeMap::new();
        for (w, c) in &acc {
            *next.entry(format!("{w}{x}")).or_insert(0) += c;
            *next.entry(format!("{x}{w}")).or_insert(0) -= c;
        }
        acc = next.into_iter().filter(|(_, c)| *c != 0).collect();
    }
    acc
}

fn omega_tensor_oracle() -> BTreeMap<String, i64> {
    let mut total: BTreeMap<String, i64> = BTreeMap::new();
    for (s, w) in omega_terms() {
        for (word, c) in left_normed_tensor(w) {
            *total.entry(word).or_insert(0) += s * c;
        }
    }
    total.into_iter().filter(|(_, c)| *c != 0).collect()
}

#[test]
fn generator_examples() {
    let xs = generators(3);
    let x = |i: u8| LieElement::<BigInt>::generator(&xs, i);
    let d = tau_generator(3, 1, 2).unwrap();
    assert_eq!(d.image(0), &x(1).bracket(&x(0)));
    assert!(d.image(1).is_zero() && d.image(2).is_zero());
    let s = SymbolSet::abc();
    assert_eq!(tau_evaluate(&s, &gen("c")).unwrap(), tau_generator(3, 1, 3).unwrap());
    assert_eq!(tau_evaluate(&s, &gen("a")).unwrap(), tau_generator(3, 1, 2).unwrap());
    let sum = tau_generator(3, 1, 3).unwrap() + tau_generator(3, 2, 3).unwrap();
    assert_eq!(sum, crate::derivations::Derivation::inner(&x(2)));
    assert!(matches!(tau_generator(3, 2, 2), Err(JohnsonError::IndexError { .. })));
    assert!(matches!(tau_generator(3, 0, 1), Err(JohnsonError::IndexError { .. })));
    assert!(matches!(tau_generator(3, 1, 4), Err(JohnsonError::IndexError { .. })));
}

#[test]
fn mccool_relation_in_kernel() {
    let s = SymbolSet::mccool(3);
    let a = s.alphabet().clone();
    let k = |i, j| LieElement::<BigInt>::generator(&a, s.letter(i, j).unwrap());
    assert!(tau_evaluate(&s, &k(1, 3).bracket(&k(2, 3))).unwrap().is_zero());
    assert!(tau_evaluate(&s, &(k(1, 3) + k(2, 3)).bracket(&k(1, 2))).unwrap().is_zero());
    assert_eq!(s.alphabet().labels()[..3], ["k12", "k13", "k21"]);
    assert_eq!(tau_evaluate(&s, &k(1, 2)).unwrap(), tau_generator(3, 1, 2).unwrap());
}

#[test]
fn omega_is_a_nonzero_kernel_element() {
    let w = omega();
    assert_eq!(w.degree(), 6);
    assert!(!w.is_zero());
    // Lyndon normal form against the raw tensor expansion of the twelve terms
    let oracle = omega_tensor_oracle();
    let t = w.to_tensor();
    let a = abc();
    let got: BTreeMap<String, i64> = t.terms().map(|(w, c)| (a.format_word(w), i64::try_from(c).unwrap())).collect();
    assert_eq!(got, oracle);
    assert_eq!(oracle.get("ccbbaa"), Some(&OMEGA_CCBBAA));
    assert!(tau_evaluate(&SymbolSet::abc(), &w).unwrap().is_zero());
    assert!(tau_evaluate_reference(&SymbolSet::abc(), &w).unwrap().is_zero());
}

/// Coefficient of `ccbbaa` in the tensor expansion of omega.
const OMEGA_CCBBAA: i64 = -1;

#[test]
fn kernel_dimensions_low_degrees() {
    let engine = TauEngine::new(SymbolSet::abc());
    let opts = KernelOptions { divisors: true, ..Default::default() };
    let expected = [0, 0, 0, 0, 0, 1, 6];
    let mut reports = Vec::new();
    for (k, dim) in (1..=7).zip(expected) {
        let r = kernel_report(&engine, k, &opts).unwrap();
        assert_eq!(r.kernel_dim, dim, "degree {k}");
        assert_eq!(r.domain_dim, r.image_rank + r.kernel_dim);
        assert_eq!(r.domain_dim as u64, crate::freelie::witt_dimension(3, k));
        let divisors = r.divisors.as_ref().unwrap();
        if k <= 5 {
            assert!(divisors.iter().all(|d| d == &BigInt::from(1)), "degree {k}");
        } else if k == 6 {
            // the image is not saturated: two factors 2 (rank mod 2 is 113)
            let mut expect = vec![BigInt::from(1); 113];
            expect.extend([BigInt::from(2), BigInt::from(2)]);
            assert_eq!(divisors, &expect);
        }
        for v in &r.basis {
            assert!(!v.is_zero());
            assert!(tau_evaluate(&SymbolSet::abc(), v).unwrap().is_zero());
        }
        reports.push(r);
    }
    let w = omega();
    let generator = &reports[5].basis[0];
    assert!(generator == &w || generator == &-w.clone());
    let b5 = bracket_map_rank(&reports[4], &reports[5]).unwrap();
    assert_eq!((b5.rank, b5.surjective), (0, false));
    let b6 = bracket_map_rank(&reports[5], &reports[6]).unwrap();
    assert_eq!((b6.rank, b6.injective, b6.surjective, b6.contained), (3, true, false, true));
}

#[test]
fn rational_reports_and_cap() {
    let engine = TauEngine::new(SymbolSet::abc());
    let opts = KernelOptions { ring: crate::Ring::Rationals, ..Default::default() };
    let r = kernel_report(&engine, 6, &opts).unwrap();
    let q = r.rational_basis.as_ref().unwrap();
    assert_eq!(q.len(), 1);
    assert_eq!(q[0].to_integers().map(|x| x == r.basis[0] || x == -r.basis[0].clone()), Some(true));
    let j = serde_json::to_value(r.to_json()).unwrap();
    assert_eq!(j["kernel_dim"], 1);
    assert_eq!(j["basis"][0]["degree"], 6);
    let err = kernel_report(&engine, 10, &KernelOptions::default()).unwrap_err();
    assert_eq!(err, JohnsonError::DegreeCap { degree: 10, cap: 9 });
}

fn random_poly(degree: usize, picks: &[(usize, i64)]) -> LiePolynomial {
    let a = abc();
    let words = lyndon_words(3, degree);
    let mut out = LieElement::zero(&a, degree);
    for (i, c) in picks {
        out = out + LieElement::basis_element(&a, &words[i % words.len()]).unwrap().scale(&BigInt::from(*c));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tau_is_a_lie_morphism(
        d1 in 1usize..4, d2 in 1usize..4,
        p1 in prop::collection::vec((0usize..500, -3i64..=3), 1..4),
        p2 in prop::collection::vec((0usize..500, -3i64..=3), 1..4),
    ) {
        let s = SymbolSet::abc();
        let (p, q) = (random_poly(d1, &p1), random_poly(d2, &p2));
        let lhs = tau_evaluate(&s, &p.bracket(&q)).unwrap();
        let rhs = tau_evaluate(&s, &p).unwrap().bracket(&tau_evaluate(&s, &q).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(&lhs, &tau_evaluate_reference(&s, &p.bracket(&q)).unwrap());
        // values are tangential
        prop_assert!(lhs.tangential_witness().is_ok());
    }
}
