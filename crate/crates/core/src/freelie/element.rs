use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::alphabet::{Alphabet, Letter, Word};
use super::lyndon::{is_lyndon, lyndon_expansion, standard_bracketing};
use super::FreeLieError;
use crate::coeff::Coeff;

pub(crate) fn add_term<R: Coeff>(terms: &mut BTreeMap<Word, R>, word: Word, c: R) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(word) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().clone() + c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

fn check_same_space(a: &Alphabet, da: usize, b: &Alphabet, db: usize) {
    assert!(a == b, "elements live over different alphabets");
    assert_eq!(da, db, "elements have different degrees");
}

/// Image of one letter under a linear substitution: a combination of target letters.
pub type LetterImage<R> = Vec<(Letter, R)>;

/// Homogeneous element of the tensor ring: a sparse combination of words of one length.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement<R: Coeff = BigInt> {
    alphabet: Arc<Alphabet>,
    degree: usize,
    terms: BTreeMap<Word, R>,
}

impl<R: Coeff> TensorElement<R> {
    pub fn zero(alphabet: &Arc<Alphabet>, degree: usize) -> Self {
        TensorElement { alphabet: alphabet.clone(), degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        alphabet: &Arc<Alphabet>,
        degree: usize,
        terms: impl IntoIterator<Item = (Word, R)>,
    ) -> Result<Self, FreeLieError> {
        let mut out = Self::zero(alphabet, degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(FreeLieError::DegreeMismatch { expected: degree, found: w.len() });
            }
            if !alphabet.contains_word(&w) {
                return Err(FreeLieError::UnknownLetter(format!("{w:?}")));
            }
            add_term(&mut out.terms, w, c);
        }
        Ok(out)
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, word: &[Letter], coeff: R) -> Self {
        let mut out = Self::zero(alphabet, word.len());
        assert!(alphabet.contains_word(word), "letter outside alphabet");
        add_term(&mut out.terms, Word::from_slice(word), coeff);
        out
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[Letter]) -> R {
        self.terms.get(word).cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(&self.alphabet, self.degree);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(w, v)| (w.clone(), v.clone() * c.clone())).collect();
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        check_same_space(&self.alphabet, self.degree, &other.alphabet, other.degree);
        for (w, v) in &other.terms {
            add_term(&mut self.terms, w.clone(), v.clone() * c.clone());
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.alphabet == other.alphabet, "elements live over different alphabets");
        let mut out = Self::zero(&self.alphabet, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                add_term(&mut out.terms, w, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        let mut out = self.mul(other);
        out.add_scaled(&other.mul(self), &-R::one());
        out
    }

    /// Applies the ring morphism sending each letter to a linear combination of target letters.
    pub fn substitute(&self, target: &Arc<Alphabet>, images: &[LetterImage<R>]) -> Self {
        assert_eq!(images.len(), self.alphabet.size(), "one image per letter");
        let mut out = Self::zero(target, self.degree);
        for (w, c) in &self.terms {
            let mut partial: Vec<(Word, R)> = vec![(Word::new(), c.clone())];
            for &l in w.iter() {
                let img = &images[usize::from(l)];
                let mut next = Vec::with_capacity(partial.len() * img.len());
                for (pw, pc) in &partial {
                    for (tl, tc) in img {
                        let mut nw = pw.clone();
                        nw.push(*tl);
                        next.push((nw, pc.clone() * tc.clone()));
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (pw, pc) in partial {
                add_term(&mut out.terms, pw, pc);
            }
        }
        out
    }

    pub(crate) fn terms_mut(&mut self) -> &mut BTreeMap<Word, R> {
        &mut self.terms
    }
}

impl<R: Coeff> fmt::Debug for TensorElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(w, c)| (c, self.alphabet.format_word(w))))
    }
}

fn write_sum<'a, R: Coeff>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (&'a R, String)>) -> fmt::Result {
    let mut empty = true;
    for (c, s) in terms {
        let sign = if c.is_negative() { "-" } else { "+" };
        if !empty {
            f.write_str(" ")?;
        }
        if c.abs().is_one() {
            write!(f, "{sign}{s}")?;
        } else {
            write!(f, "{sign}{}*{s}", c.abs())?;
        }
        empty = false;
    }
    if empty {
        f.write_str("0")?;
    }
    Ok(())
}

/// Homogeneous element of the free Lie ring, in coordinates on the Lyndon basis.
///
/// Keys are Lyndon words of length `degree`; each stands for its standard bracketing.
#[derive(Clone, PartialEq, Eq)]
pub struct LieElement<R: Coeff = BigInt> {
    alphabet: Arc<Alphabet>,
    degree: usize,
    terms: BTreeMap<Word, R>,
}

impl<R: Coeff> LieElement<R> {
    pub fn zero(alphabet: &Arc<Alphabet>, degree: usize) -> Self {
        assert!(degree >= 1, "Lie elements have positive degree");
        LieElement { alphabet: alphabet.clone(), degree, terms: BTreeMap::new() }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, letter: Letter) -> Self {
        Self::basis_element(alphabet, &[letter]).expect("letters are Lyndon")
    }

    /// The standard bracketing of a Lyndon word.
    pub fn basis_element(alphabet: &Arc<Alphabet>, word: &[Letter]) -> Result<Self, FreeLieError> {
        Self::from_terms(alphabet, word.len(), [(Word::from_slice(word), R::one())])
    }

    pub fn from_terms(
        alphabet: &Arc<Alphabet>,
        degree: usize,
        terms: impl IntoIterator<Item = (Word, R)>,
    ) -> Result<Self, FreeLieError> {
        if degree == 0 {
            return Err(FreeLieError::DegreeMismatch { expected: 1, found: 0 });
        }
        let mut out = Self::zero(alphabet, degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(FreeLieError::DegreeMismatch { expected: degree, found: w.len() });
            }
            if !alphabet.contains_word(&w) {
                return Err(FreeLieError::UnknownLetter(format!("{w:?}")));
            }
            if !is_lyndon(&w) {
                return Err(FreeLieError::NotLyndon(alphabet.format_word(&w)));
            }
            add_term(&mut out.terms, w, c);
        }
        Ok(out)
    }

    pub(crate) fn from_terms_unchecked(alphabet: &Arc<Alphabet>, degree: usize, terms: BTreeMap<Word, R>) -> Self {
        debug_assert!(terms.iter().all(|(w, c)| w.len() == degree && is_lyndon(w) && !c.is_zero()));
        LieElement { alphabet: alphabet.clone(), degree, terms }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of Lyndon basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[Letter]) -> R {
        self.terms.get(word).cloned().unwrap_or_else(R::zero)
    }

    /// Smallest Lyndon word with a nonzero coefficient.
    pub fn leading_term(&self) -> Option<(&Word, &R)> {
        self.terms.iter().next()
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(&self.alphabet, self.degree);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(w, v)| (w.clone(), v.clone() * c.clone())).collect();
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        check_same_space(&self.alphabet, self.degree, &other.alphabet, other.degree);
        for (w, v) in &other.terms {
            add_term(&mut self.terms, w.clone(), v.clone() * c.clone());
        }
    }

    /// Image in the tensor ring, expanding `[x,y]` as `xy - yx`.
    pub fn to_tensor(&self) -> TensorElement<R> {
        let mut out = TensorElement::zero(&self.alphabet, self.degree);
        for (w, c) in &self.terms {
            for (v, e) in lyndon_expansion(w).iter() {
                add_term(out.terms_mut(), v.clone(), c.clone() * R::from_i64(*e));
            }
        }
        out
    }

    /// Recovers the Lie element whose tensor image is `t`.
    ///
    /// Peels off the lexicographically smallest word, which must be Lyndon and carries the
    /// coefficient of its basis element.
    pub fn from_tensor(t: &TensorElement<R>) -> Result<Self, FreeLieError> {
        if t.degree() == 0 {
            return Err(FreeLieError::DegreeMismatch { expected: 1, found: 0 });
        }
        let mut rest = t.terms.clone();
        let mut out = BTreeMap::new();
        while let Some((w, c)) = rest.pop_first() {
            if !is_lyndon(&w) {
                return Err(FreeLieError::NotALieElement(t.alphabet.format_word(&w)));
            }
            let exp = lyndon_expansion(&w);
            for (v, e) in exp.iter().skip(1) {
                add_term(&mut rest, v.clone(), -(c.clone() * R::from_i64(*e)));
            }
            out.insert(w, c);
        }
        Ok(Self::from_terms_unchecked(&t.alphabet, t.degree, out))
    }

    /// Lie bracket, normalized through the tensor ring.
    pub fn bracket(&self, other: &Self) -> Self {
        assert!(self.alphabet == other.alphabet, "elements live over different alphabets");
        let t = self.to_tensor().commutator(&other.to_tensor());
        Self::from_tensor(&t).expect("commutator of Lie elements is a Lie element")
    }

    /// Lie bracket, normalized by rewriting Lyndon brackets directly.
    pub fn bracket_rewrite(&self, other: &Self) -> Self {
        assert!(self.alphabet == other.alphabet, "elements live over different alphabets");
        let mut out = BTreeMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                for (w, e) in super::rewrite::bracket_basis(u, v).iter() {
                    add_term(&mut out, w.clone(), cu.clone() * cv.clone() * R::from_i64(*e));
                }
            }
        }
        Self::from_terms_unchecked(&self.alphabet, self.degree + other.degree, out)
    }

    /// Applies the Lie morphism sending each letter to a combination of target letters.
    ///
    /// Letter-to-letter maps that preserve the order of the surviving letters send Lyndon
    /// words to Lyndon words with the same factorization; those are relabeled directly.
    pub fn substitute(&self, target: &Arc<Alphabet>, images: &[LetterImage<R>]) -> Self {
        assert_eq!(images.len(), self.alphabet.size(), "one image per letter");
        let simple: Option<Vec<Option<Letter>>> = images
            .iter()
            .map(|img| match img.as_slice() {
                [] => Some(None),
                [(l, c)] if c.is_one() => Some(Some(*l)),
                _ => None,
            })
            .collect();
        if let Some(map) = simple {
            let survivors: Vec<Letter> = map.iter().flatten().copied().collect();
            if survivors.windows(2).all(|p| p[0] < p[1]) {
                let mut out = BTreeMap::new();
                'words: for (w, c) in &self.terms {
                    let mut nw = Word::with_capacity(w.len());
                    for &l in w.iter() {
                        match map[usize::from(l)] {
                            Some(t) => nw.push(t),
                            None => continue 'words,
                        }
                    }
                    out.insert(nw, c.clone());
                }
                return Self::from_terms_unchecked(target, self.degree, out);
            }
        }
        let t = self.to_tensor().substitute(target, images);
        Self::from_tensor(&t).expect("morphic image of a Lie element")
    }

    /// The same element over another alphabet of the same size, letter by letter.
    pub fn relabel(&self, target: &Arc<Alphabet>) -> Result<Self, FreeLieError> {
        if target.size() != self.alphabet.size() {
            return Err(FreeLieError::AlphabetMismatch);
        }
        Ok(Self::from_terms_unchecked(target, self.degree, self.terms.clone()))
    }

    pub fn bracket_tree_display(&self) -> String {
        let terms = self.terms.iter().map(|(w, c)| {
            let tree = standard_bracketing(w).expect("keys are Lyndon");
            let shown = tree.display(&self.alphabet).to_string();
            (c, shown)
        });
        let mut s = String::new();
        let mut first = true;
        for (c, t) in terms {
            let sign = if c.is_negative() { "-" } else { "+" };
            if !first {
                s.push(' ');
            }
            first = false;
            if c.abs().is_one() {
                s.push_str(&format!("{sign}{t}"));
            } else {
                s.push_str(&format!("{sign}{}*{t}", c.abs()));
            }
        }
        if first {
            s.push('0');
        }
        s
    }
}

impl LieElement<BigInt> {
    pub fn to_rationals(&self) -> LieElement<BigRational> {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), BigRational::from_integer(c.clone())));
        LieElement::from_terms_unchecked(&self.alphabet, self.degree, terms.collect())
    }
}

impl LieElement<BigRational> {
    /// Integer version, when every coefficient is integral.
    pub fn to_integers(&self) -> Option<LieElement<BigInt>> {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| c.as_integer().map(|c| (w.clone(), c)))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(LieElement::from_terms_unchecked(&self.alphabet, self.degree, terms))
    }
}

impl<R: Coeff> fmt::Debug for LieElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(w, c)| (c, format!("P({})", self.alphabet.format_word(w)))))
    }
}

impl<R: Coeff> fmt::Display for LieElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket_tree_display())
    }
}

macro_rules! impl_linear_ops {
    ($t:ident) => {
        impl<R: Coeff> Add for &$t<R> {
            type Output = $t<R>;
            fn add(self, rhs: Self) -> $t<R> {
                let mut out = self.clone();
                out.add_scaled(rhs, &R::one());
                out
            }
        }

        impl<R: Coeff> Sub for &$t<R> {
            type Output = $t<R>;
            fn sub(self, rhs: Self) -> $t<R> {
                let mut out = self.clone();
                out.add_scaled(rhs, &-R::one());
                out
            }
        }

        impl<R: Coeff> Neg for &$t<R> {
            type Output = $t<R>;
            fn neg(self) -> $t<R> {
                self.scale(&-R::one())
            }
        }

        impl<R: Coeff> Add for $t<R> {
            type Output = $t<R>;
            fn add(self, rhs: Self) -> $t<R> {
                &self + &rhs
            }
        }

        impl<R: Coeff> Sub for $t<R> {
            type Output = $t<R>;
            fn sub(self, rhs: Self) -> $t<R> {
                &self - &rhs
            }
        }

        impl<R: Coeff> Neg for $t<R> {
            type Output = $t<R>;
            fn neg(self) -> $t<R> {
                -&self
            }
        }
    };
}

impl_linear_ops!(LieElement);
impl_linear_ops!(TensorElement);

/// Left-normed bracket `[g1, g2, ..., gm] = [...[[g1, g2], g3], ..., gm]`.
pub fn left_normed<R: Coeff>(gens: &[LieElement<R>]) -> LieElement<R> {
    let (first, rest) = gens.split_first().expect("left_normed needs at least one element");
    rest.iter().fold(first.clone(), |acc, g| acc.bracket(g))
}
