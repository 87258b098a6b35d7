use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::freelie::{lyndon_words, witt_dimension, Alphabet, LieElement};
use crate::johnson::{kernel_report, omega, tau_generator, KernelOptions, TauEngine};

fn abc() -> Arc<Alphabet> {
    abc_alphabet()
}

fn poly(k: usize, coeffs: &[i64]) -> LiePolynomial {
    let a = abc();
    let mut p = LieElement::zero(&a, k);
    for (w, c) in lyndon_words(3, k).iter().zip(coeffs) {
        p.add_scaled(&LieElement::basis_element(&a, w).unwrap(), &BigInt::from(*c));
    }
    p
}

fn random_poly(max_degree: usize) -> impl Strategy<Value = LiePolynomial> {
    (1..=max_degree).prop_flat_map(|k| {
        prop::collection::vec(-3i64..=3, witt_dimension(3, k) as usize).prop_map(move |c| poly(k, &c))
    })
}

fn dense_matrix(m: &SparseMat) -> Vec<Vec<BigInt>> {
    let mut out = vec![vec![BigInt::zero(); m.cols()]; m.rows()];
    for (r, c, x) in m.triplets() {
        out[r][c] = x.clone();
    }
    out
}

fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = b[0].len();
    a.iter().map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, r)| x * &r[j]).sum()).collect()).collect()
}

#[test]
fn generator_matrices() {
    assert_eq!(action_on_generators(&S3Element::IDENTITY), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    // (12): a <-> b, c -> -c
    assert_eq!(action_on_generators(&S3Element::T12), [[0, 1, 0], [1, 0, 0], [0, 0, -1]]);
    // (23): a <-> c, b -> -b
    assert_eq!(action_on_generators(&S3Element::T23), [[0, 0, 1], [0, -1, 0], [1, 0, 0]]);
    let c = S3Element::C123;
    assert!(c.compose(&c).compose(&c).is_identity());
    for s in S3Element::all() {
        for t in S3Element::all() {
            let lhs = action_on_generators(&s.compose(&t));
            let (ms, mt) = (action_on_generators(&s), action_on_generators(&t));
            let mut prod = [[0i64; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    prod[i][j] = (0..3).map(|l| ms[i][l] * mt[l][j]).sum();
                }
            }
            assert_eq!(lhs, prod, "{s} {t}");
        }
    }
}

#[test]
fn degree_one_matches_generators() {
    for s in S3Element::all() {
        let m = dense_matrix(&action_on_degree(&s, 1).unwrap());
        let g = action_on_generators(&s);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m[i][j], BigInt::from(g[i][j]));
            }
        }
    }
}

#[test]
fn transpositions_negate_omega() {
    let w = omega();
    for s in [S3Element::T12, S3Element::T23, S3Element::T13] {
        assert_eq!(act(&s, &w).unwrap(), w.scale(&BigInt::from(-1)), "{s}");
    }
    for s in [S3Element::C123, S3Element::C132] {
        assert_eq!(act(&s, &w).unwrap(), w);
    }
}

#[test]
fn homomorphism_up_to_degree_four() {
    for k in 1..=4 {
        let mats: Vec<_> =
            S3Element::all().into_iter().map(|s| (s, dense_matrix(&action_on_degree(&s, k).unwrap()))).collect();
        for (s, ms) in &mats {
            for (t, mt) in &mats {
                let st = dense_matrix(&action_on_degree(&s.compose(t), k).unwrap());
                assert_eq!(st, matmul(ms, mt), "k={k} {s} {t}");
            }
        }
    }
}

// [x, y] for letters x < y goes to s_x s_y [sx, sy], reordered by antisymmetry
#[test]
fn three_cycle_trace_in_degree_two() {
    let c = S3Element::C123;
    let g = signed_generator_action(&c);
    let mut brute = 0;
    for (x, y) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let (u, v) = (g.letter[x], g.letter[y]);
        if (u.min(v), u.max(v)) == (x as u8, y as u8) {
            let s = g.sign[x] * g.sign[y];
            brute += if u < v { s } else { -s };
        }
    }
    let m = action_on_degree(&c, 2).unwrap();
    let trace: BigInt = (0..3).map(|i| m.get(i, i)).sum();
    assert_eq!(trace, BigInt::from(brute));
}

#[test]
fn characters_in_low_degree() {
    let engine = TauEngine::new(SymbolSet::abc());
    let expected = [(5, [0, 0, 0]), (6, [1, -1, 1]), (7, [6, 0, 0])];
    for (k, chi) in expected {
        let r = kernel_report(&engine, k, &KernelOptions::default()).unwrap();
        assert_eq!(kernel_character(&r).unwrap(), Character::from(chi), "k={k}");
    }
    assert_eq!(Character::from([1, -1, 1]).decompose(), Some(Decomposition { trivial: 0, sign: 1, standard: 0 }));
    assert_eq!(Character::from([6, 0, 0]).decompose(), Some(Decomposition { trivial: 1, sign: 1, standard: 2 }));
    assert_eq!(Character::from([24, -2, 0]).decompose(), Some(Decomposition { trivial: 3, sign: 5, standard: 8 }));
    assert_eq!(Character::from([92, 0, 2]).decompose(), Some(Decomposition { trivial: 16, sign: 16, standard: 30 }));
    assert_eq!(Character::from([1, 0, 0]).decompose(), None);
    assert_eq!(Character::from([1, -1, 1]).to_string(), "(1, -1, 1)");
}

#[test]
fn equivariance_examples() {
    let a = abc();
    let kappa12 = LieElement::generator(&a, 0);
    for s in S3Element::all() {
        assert!(equivariance_check(&s, &kappa12).unwrap(), "{s}");
    }
    assert!(equivariance_check(&S3Element::C123, &omega()).unwrap());
    // tau(kappa_12) = d_12 and (12) . d_12 = d_21 = tau(kappa_21)
    let d12 = tau_generator(3, 1, 2).unwrap();
    let moved = act_on_derivation(&S3Element::T12, &d12).unwrap();
    assert_eq!(moved, tau_generator(3, 2, 1).unwrap());
}

#[test]
fn rejects_foreign_alphabet() {
    let x = LieElement::generator(&crate::derivations::generators(3), 0);
    assert_eq!(act(&S3Element::T12, &x), Err(SymmetryError::WrongAlphabet));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_commutes_with_brackets(p in random_poly(3), q in random_poly(3), i in 0usize..6) {
        let s = S3Element::all()[i];
        let lhs = act(&s, &p.bracket(&q)).unwrap();
        let rhs = act(&s, &p).unwrap().bracket(&act(&s, &q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tau_is_equivariant(p in random_poly(5), i in 0usize..6) {
        let s = S3Element::all()[i];
        prop_assert!(equivariance_check(&s, &p).unwrap());
    }
}
