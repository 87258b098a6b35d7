use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::freelie::{lyndon_words, witt_dimension};
use crate::johnson::{tau_evaluate, tau_generator};

fn triple(n: usize, idx: [usize; 3]) -> IndexTriple {
    IndexTriple::new(n, idx).unwrap()
}

fn sym(set: &SymbolSet, i: usize, j: usize) -> LiePolynomial {
    LieElement::generator(set.alphabet(), set.letter(i, j).unwrap())
}

fn poly3(k: usize, coeffs: &[i64]) -> LiePolynomial {
    let s = SymbolSet::mccool(3);
    let mut p = LieElement::zero(s.alphabet(), k);
    for (w, c) in lyndon_words(6, k).iter().zip(coeffs) {
        p.add_scaled(&LieElement::basis_element(s.alphabet(), w).unwrap(), &BigInt::from(*c));
    }
    p
}

fn random3(max_degree: usize) -> impl Strategy<Value = LiePolynomial> {
    (1..=max_degree).prop_flat_map(|k| {
        prop::collection::vec(-2i64..=2, witt_dimension(6, k) as usize).prop_map(move |c| poly3(k, &c))
    })
}

fn random_der3() -> impl Strategy<Value = Derivation> {
    (1usize..=3).prop_flat_map(|k| {
        let w = witt_dimension(3, k + 1) as usize;
        prop::collection::vec(prop::collection::vec(-2i64..=2, w), 3).prop_map(move |rows| {
            let xs = generators(3);
            let images = rows
                .iter()
                .map(|c| {
                    let mut p = LieElement::zero(&xs, k + 1);
                    for (w, x) in lyndon_words(3, k + 1).iter().zip(c) {
                        p.add_scaled(&LieElement::basis_element(&xs, w).unwrap(), &BigInt::from(*x));
                    }
                    p
                })
                .collect();
            Derivation::new(&xs, k, images).unwrap()
        })
    })
}

#[test]
fn triples() {
    assert_eq!(IndexTriple::all(5).len(), 10);
    assert!(IndexTriple::new(4, [1, 3, 2]).is_err());
    assert!(IndexTriple::new(4, [1, 2, 5]).is_err());
    assert_eq!("4:1,2,4".parse::<IndexTriple>().unwrap(), triple(4, [1, 2, 4]));
    assert_eq!(triple(4, [1, 2, 4]).to_string(), "{1,2,4}");
    assert_eq!(triple(5, [2, 3, 5]).position(5), Some(3));
}

#[test]
fn symbol_maps() {
    let (s3, s4) = (SymbolSet::mccool(3), SymbolSet::mccool(4));
    let id = triple(3, [1, 2, 3]);
    let p = sym(&s3, 1, 2).bracket(&sym(&s3, 3, 1));
    assert_eq!(iota_sym(&id, &p).unwrap(), p);
    let c = LieElement::generator(SymbolSet::abc().alphabet(), 2);
    assert_eq!(iota_sym(&triple(4, [1, 2, 4]), &c).unwrap(), sym(&s4, 1, 4));
    assert!(pi_sym(&triple(4, [1, 2, 3]), &sym(&s4, 1, 4)).unwrap().is_zero());
    assert_eq!(pi_sym(&triple(4, [2, 3, 4]), &sym(&s4, 4, 2)).unwrap(), sym(&s3, 3, 1));
}

#[test]
fn derivation_maps() {
    let d13 = tau_generator(3, 1, 3).unwrap();
    assert_eq!(iota_der(&triple(4, [1, 2, 4]), &d13).unwrap(), tau_generator(4, 1, 4).unwrap());
    assert!(pi_der(&triple(4, [1, 2, 3]), &tau_generator(4, 1, 4).unwrap()).unwrap().is_zero());
    assert_eq!(
        pi_der(&triple(4, [1, 3, 4]), &tau_generator(4, 4, 3).unwrap()).unwrap(),
        tau_generator(3, 3, 2).unwrap()
    );
}

#[test]
fn omega_grid_in_four_strands() {
    let w = omega();
    let w3 = abc_as_mccool(&w).unwrap();
    let s4 = SymbolSet::mccool(4);
    for i in IndexTriple::all(4) {
        let p = iota_sym(&i, &w).unwrap();
        assert!(tau_evaluate(&s4, &p).unwrap().is_zero(), "{i}");
        for j in IndexTriple::all(4) {
            let q = pi_sym(&j, &p).unwrap();
            if i == j {
                assert_eq!(q, w3);
            } else {
                assert!(q.is_zero(), "{i} {j}");
            }
        }
    }
}

#[test]
fn certificates() {
    for (n, count) in [(3, 1), (4, 4), (5, 10)] {
        let c = independence_certificate(n).unwrap();
        assert_eq!(c.count, count);
        assert_eq!(c.grid.len(), count * count);
        assert!(c.verified, "n={n}");
    }
    assert_eq!(independence_certificate(2).unwrap_err(), StabilizationError::Size { n: 2, max: MAX_CERTIFICATE_N });
    assert!(independence_certificate(8).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn projection_splits_injection(p in random3(3), a in 0usize..10) {
        let i = IndexTriple::all(5)[a];
        prop_assert_eq!(pi_sym(&i, &iota_sym(&i, &p).unwrap()).unwrap(), p);
    }

    #[test]
    fn symbol_maps_are_morphisms(p in random3(2), q in random3(2), a in 0usize..10, b in 0usize..10) {
        let (i, j) = (IndexTriple::all(5)[a], IndexTriple::all(5)[b]);
        let up = iota_sym(&i, &p.bracket(&q)).unwrap();
        prop_assert_eq!(&up, &iota_sym(&i, &p).unwrap().bracket(&iota_sym(&i, &q).unwrap()));
        let down = pi_sym(&j, &up).unwrap();
        let parts = pi_sym(&j, &iota_sym(&i, &p).unwrap()).unwrap().bracket(&pi_sym(&j, &iota_sym(&i, &q).unwrap()).unwrap());
        prop_assert_eq!(down, parts);
    }

    #[test]
    fn derivation_maps_split_and_commute(d in random_der3(), e in random_der3(), a in 0usize..4) {
        let i = IndexTriple::all(4)[a];
        let up = iota_der(&i, &d).unwrap();
        prop_assert_eq!(&pi_der(&i, &up).unwrap(), &d);
        let lhs = iota_der(&i, &d.bracket(&e)).unwrap();
        prop_assert_eq!(lhs, up.bracket(&iota_der(&i, &e).unwrap()));
    }

    #[test]
    fn tau_square_commutes(p in random3(3), a in 0usize..4) {
        let i = IndexTriple::all(4)[a];
        let lhs = tau_evaluate(&SymbolSet::mccool(4), &iota_sym(&i, &p).unwrap()).unwrap();
        let rhs = iota_der(&i, &tau_evaluate(&SymbolSet::mccool(3), &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
