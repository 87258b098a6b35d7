use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn x3() -> Arc<Alphabet> {
    Arc::new(Alphabet::numbered("X", 3))
}

fn gen(a: &Arc<Alphabet>, l: Letter) -> LieElement {
    LieElement::generator(a, l)
}

fn tensor(a: &Arc<Alphabet>, terms: &[(&str, i64)]) -> TensorElement {
    let degree = a.parse_word(terms[0].0).unwrap().len();
    TensorElement::from_terms(a, degree, terms.iter().map(|(w, c)| (a.parse_word(w).unwrap(), BigInt::from(*c))))
        .unwrap()
}

/// Expands a nested bracket directly in the tensor ring, independent of any normal form.
enum Tree {
    L(Letter),
    B(Box<Tree>, Box<Tree>),
}

fn oracle_tensor(a: &Arc<Alphabet>, t: &Tree) -> TensorElement {
    match t {
        Tree::L(l) => TensorElement::monomial(a, &[*l], BigInt::from(1)),
        Tree::B(x, y) => {
            let (x, y) = (oracle_tensor(a, x), oracle_tensor(a, y));
            &x.mul(&y) - &y.mul(&x)
        }
    }
}

fn b(x: Tree, y: Tree) -> Tree {
    Tree::B(Box::new(x), Box::new(y))
}

#[test]
fn bracket_examples() {
    let a = x3();
    let (x1, x2) = (gen(&a, 0), gen(&a, 1));
    assert!(x1.bracket(&x1).is_zero());
    assert_eq!(x1.bracket(&x2), LieElement::basis_element(&a, &[0, 1]).unwrap());

    let lhs = x1.bracket(&x2).bracket(&x1);
    let expected = -LieElement::basis_element(&a, &[0, 0, 1]).unwrap();
    assert_eq!(lhs, expected);
    let oracle = oracle_tensor(&a, &b(b(Tree::L(0), Tree::L(1)), Tree::L(0)));
    assert_eq!(lhs.to_tensor(), oracle);
    assert_eq!(oracle, tensor(&a, &[("X1.X1.X2", -1), ("X1.X2.X1", 2), ("X2.X1.X1", -1)]));
}

#[test]
fn left_normed_examples() {
    let abc = Arc::new(Alphabet::abc());
    let (ga, gb, gc) = (gen(&abc, 0), gen(&abc, 1), gen(&abc, 2));
    assert_eq!(left_normed(std::slice::from_ref(&ga)), ga);
    assert!(left_normed(&[ga.clone(), ga.clone(), gb.clone()]).is_zero());

    let cab = left_normed(&[gc, ga, gb]);
    assert_eq!(cab.degree(), 3);
    assert!(cab.len() <= 2);
    let oracle = oracle_tensor(&abc, &b(b(Tree::L(2), Tree::L(0)), Tree::L(1)));
    assert_eq!(cab.to_tensor(), oracle);
}

#[test]
fn tensor_images() {
    let a = x3();
    assert_eq!(gen(&a, 0).to_tensor(), tensor(&a, &[("X1", 1)]));
    let x12 = gen(&a, 0).bracket(&gen(&a, 1));
    assert_eq!(x12.to_tensor(), tensor(&a, &[("X1.X2", 1), ("X2.X1", -1)]));
}

#[test]
fn from_tensor_examples() {
    let a = x3();
    let t = tensor(&a, &[("X1.X2", 1), ("X2.X1", -1)]);
    assert_eq!(LieElement::from_tensor(&t).unwrap(), gen(&a, 0).bracket(&gen(&a, 1)));
    let not_lie = tensor(&a, &[("X1.X2", 1)]);
    assert!(matches!(LieElement::from_tensor(&not_lie), Err(FreeLieError::NotALieElement(_))));
    // Lyndon leading word, but a nonzero residue remains afterwards.
    let residue = tensor(&a, &[("X1.X2", 1), ("X2.X1", -2)]);
    assert!(matches!(LieElement::from_tensor(&residue), Err(FreeLieError::NotALieElement(_))));
}

#[test]
fn substitution_reorders_letters() {
    // a -> K12, b -> K21, c -> K13 does not preserve the order b < c.
    let abc = Arc::new(Alphabet::abc());
    let target = Arc::new(Alphabet::new(["K12", "K13", "K21"]).unwrap());
    let one = BigInt::from(1);
    let images = vec![vec![(0, one.clone())], vec![(2, one.clone())], vec![(1, one)]];
    let u = left_normed(&[gen(&abc, 1), gen(&abc, 2), gen(&abc, 0)]);
    let v = u.substitute(&target, &images);
    assert_eq!(v.to_tensor(), u.to_tensor().substitute(&target, &images));
    let back = vec![vec![(0, BigInt::from(1))], vec![(2, BigInt::from(1))], vec![(1, BigInt::from(1))]];
    assert_eq!(v.substitute(&abc, &back), u);
}

#[test]
fn json_round_trip_and_rationals() {
    let abc = Arc::new(Alphabet::abc());
    let u = left_normed(&[gen(&abc, 2), gen(&abc, 0), gen(&abc, 1)]);
    let json = serde_json::to_string(&u.to_json()).unwrap();
    let parsed: ElementJson = serde_json::from_str(&json).unwrap();
    assert_eq!(LieElement::<BigInt>::from_json(&parsed).unwrap(), u);

    let half = u.to_rationals().scale(&BigRational::new(1.into(), 2.into()));
    let j = half.to_json();
    assert!(j.terms.iter().any(|t| t.coeff.contains('/')));
    assert_eq!(LieElement::<BigRational>::from_json(&j).unwrap(), half);
    assert!(half.to_integers().is_none());

    let mut bad = u.to_json();
    bad.terms[0].word = "ba".into();
    assert!(LieElement::<BigInt>::from_json(&bad).is_err());
}

fn element(a: &Arc<Alphabet>, degree: usize, picks: &[(usize, i64)]) -> LieElement {
    let words = lyndon_words(a.size(), degree);
    if words.is_empty() {
        return LieElement::zero(a, degree);
    }
    LieElement::from_terms(a, degree, picks.iter().map(|(i, c)| (words[i % words.len()].clone(), BigInt::from(*c))))
        .unwrap()
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..10_000, -4i64..=4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn antisymmetry_and_jacobi(
        d in (1usize..=6, 1usize..=6, 1usize..=6).prop_filter("total degree <= 8", |(a, b, c)| a + b + c <= 8),
        pu in picks(), pv in picks(), pw in picks(),
    ) {
        let a = x3();
        let (u, v, w) = (element(&a, d.0, &pu), element(&a, d.1, &pv), element(&a, d.2, &pw));
        prop_assert!((&u.bracket(&v) + &v.bracket(&u)).is_zero());
        let jac = &(&u.bracket(&v).bracket(&w) + &v.bracket(&w).bracket(&u)) + &w.bracket(&u).bracket(&v);
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn tensor_map_is_a_lie_morphism(d in (1usize..=4, 1usize..=4), pu in picks(), pv in picks()) {
        let a = x3();
        let (u, v) = (element(&a, d.0, &pu), element(&a, d.1, &pv));
        prop_assert_eq!(u.bracket(&v).to_tensor(), u.to_tensor().commutator(&v.to_tensor()));
    }

    #[test]
    fn rewrite_path_agrees_with_tensor_path(d in (1usize..=4, 1usize..=4), pu in picks(), pv in picks()) {
        let a = x3();
        let (u, v) = (element(&a, d.0, &pu), element(&a, d.1, &pv));
        prop_assert_eq!(u.bracket_rewrite(&v), u.bracket(&v));
    }

    #[test]
    fn from_tensor_inverts_to_tensor(n in 2usize..=3, d in 1usize..=8, p in picks()) {
        let a = Arc::new(Alphabet::numbered("X", n));
        let u = element(&a, d, &p);
        let t = u.to_tensor();
        let back = LieElement::from_tensor(&t).unwrap();
        prop_assert_eq!(back.to_tensor(), t);
        prop_assert_eq!(back, u);
    }
}
