use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::freelie::{lyndon_words, witt_dimension};
use crate::johnson::tau_generator;

fn c(m: usize) -> SdElement {
    SdElement::inner_generator(m)
}

fn g(l: u8) -> SdElement {
    SdElement::from_g(LieElement::generator(SymbolSet::abc().alphabet(), l)).unwrap()
}

fn random_part(alpha: &Arc<Alphabet>, k: usize, coeffs: &[i64]) -> LieElement<BigInt> {
    let mut p = LieElement::zero(alpha, k);
    for (w, x) in lyndon_words(3, k).iter().zip(coeffs) {
        p.add_scaled(&LieElement::basis_element(alpha, w).unwrap(), &BigInt::from(*x));
    }
    p
}

fn random_sd(max_degree: usize) -> impl Strategy<Value = SdElement> {
    (1..=max_degree).prop_flat_map(|k| {
        let w = witt_dimension(3, k) as usize;
        (prop::collection::vec(-2i64..=2, w), prop::collection::vec(-2i64..=2, w)).prop_map(move |(h, x)| {
            SdElement::new(random_part(&inner_alphabet(), k, &h), random_part(SymbolSet::abc().alphabet(), k, &x))
                .unwrap()
        })
    })
}

fn br(u: &SdElement, v: &SdElement) -> SdElement {
    sd_bracket(u, v).unwrap()
}

#[test]
fn bracket_examples() {
    let c12 = br(&c(1), &c(2));
    assert_eq!(c12.h(), &c(1).h().bracket(c(2).h()));
    assert!(c12.g().is_zero());
    // tau(a) = d12 sends X1 to [X2, X1]
    let ac1 = br(&g(0), &c(1));
    assert_eq!(ac1.h(), &c(2).h().bracket(c(1).h()));
    assert!(ac1.g().is_zero());
    let ab = br(&g(0), &g(1));
    assert!(ab.h().is_zero());
    assert_eq!(ab.g(), &g(0).g().bracket(g(1).g()));
}

#[test]
fn ranks() {
    assert_eq!(sd_rank(1), 6);
    assert_eq!(sd_rank(6), 232);
    assert_eq!(sd_rank(9), 4368);
}

#[test]
fn inner_class_maps_to_inner_derivation() {
    let d = sd_tau(&c(3)).unwrap();
    let expected = tau_generator(3, 1, 3).unwrap() + tau_generator(3, 2, 3).unwrap();
    assert_eq!(d, expected);
}

#[test]
fn degree_one_action() {
    let neg = BigInt::from(-1);
    let moved = sd_s3_action(&S3Element::T12, &g(2)).unwrap();
    assert_eq!(moved, c(3) + g(2).scale(&neg));
    let moved = sd_s3_action(&S3Element::T23, &g(1)).unwrap();
    assert_eq!(moved, c(1) + g(1).scale(&neg));
    assert_eq!(sd_s3_action(&S3Element::C123, &c(1)).unwrap(), c(2));
    assert_eq!(SdElement::kappa(3, 1), c(1) + g(1).scale(&neg));
    for i in 1..=3 {
        for j in (1..=3).filter(|&j| j != i) {
            for s in S3Element::all() {
                let lhs = sd_s3_action(&s, &SdElement::kappa(i, j)).unwrap();
                assert_eq!(lhs, SdElement::kappa(s.apply(i), s.apply(j)), "{s} k{i}{j}");
            }
        }
    }
}

#[test]
fn tau_kernel_lies_in_g() {
    for (k, dim) in [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 1), (7, 6)] {
        let r = sd_tau_kernel(k).unwrap();
        assert_eq!(r.domain_dim as u64, sd_rank(k));
        assert_eq!(r.kernel_dim, dim, "k={k}");
        assert!(r.h_part_zero);
        assert_eq!(h_injectivity_rank(k).unwrap() as u64, witt_dimension(3, k));
        assert_eq!(tau_h_cap_tau_g(k).unwrap(), 0);
    }
}

#[test]
fn kappa_as_intersection() {
    for (k, dim) in [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 1), (7, 6)] {
        assert_eq!(intersection_kappa(k, DEFAULT_INTERSECTION_CAP).unwrap(), dim, "k={k}");
    }
    assert_eq!(intersection_kappa(8, DEFAULT_INTERSECTION_CAP), Err(PsigmaError::DegreeCap { degree: 8, cap: 7 }));
}

#[test]
fn mismatched_parts() {
    let err = SdElement::new(c(1).h().clone(), g(0).g().bracket(g(1).g())).unwrap_err();
    assert_eq!(err, PsigmaError::DegreeMismatch { h: 1, g: 2 });
    assert_eq!(SdElement::new(g(0).g().clone(), g(0).g().clone()).unwrap_err(), PsigmaError::WrongAlphabet);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi(u in random_sd(3), v in random_sd(2), w in random_sd(2)) {
        let total = br(&br(&u, &v), &w) + br(&br(&v, &w), &u) + br(&br(&w, &u), &v);
        prop_assert!(total.is_zero());
    }

    #[test]
    fn tau_is_a_morphism(u in random_sd(3), v in random_sd(3)) {
        let lhs = sd_tau(&br(&u, &v)).unwrap();
        let rhs = sd_tau(&u).unwrap().bracket(&sd_tau(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_preserves_brackets(u in random_sd(3), v in random_sd(2), i in 0usize..6) {
        let s = S3Element::all()[i];
        let lhs = sd_s3_action(&s, &br(&u, &v)).unwrap();
        let rhs = br(&sd_s3_action(&s, &u).unwrap(), &sd_s3_action(&s, &v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_equivariant(u in random_sd(4), i in 0usize..6) {
        let s = S3Element::all()[i];
        let lhs = sd_tau(&sd_s3_action(&s, &u).unwrap()).unwrap();
        let rhs = crate::symmetry::act_on_derivation(&s, &sd_tau(&u).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn three_cycle_has_order_three(u in random_sd(4)) {
        let c = S3Element::C123;
        let once = sd_s3_action(&c, &u).unwrap();
        let thrice = sd_s3_action(&c, &sd_s3_action(&c, &once).unwrap()).unwrap();
        prop_assert_eq!(thrice, u);
    }
}
