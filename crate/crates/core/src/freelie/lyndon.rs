use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::alphabet::{Alphabet, Letter, Word};
use super::FreeLieError;

/// `true` when `w` is nonempty and strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[Letter]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of length `k` over `n` letters, in lexicographic order.
pub fn lyndon_words(n: usize, k: usize) -> Vec<Word> {
    assert!(n <= usize::from(Letter::MAX), "alphabet too large");
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    let top = (n - 1) as Letter;
    let mut w: Word = Word::from_slice(&[0]);
    loop {
        if w.len() == k {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < k {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(l) => *l += 1,
            None => break,
        }
    }
    out
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Rank of the degree-`k` part of the free Lie ring on `n` generators (necklace count).
///
/// Panics if the value does not fit in a `u64`.
pub fn witt_dimension(n: usize, k: usize) -> u64 {
    assert!(k >= 1, "degree must be positive");
    let base = BigInt::from(n);
    let mut total = BigInt::from(0);
    for d in 1..=k {
        if k.is_multiple_of(d) {
            total += mobius(d as u64) * num_traits::pow(base.clone(), k / d);
        }
    }
    let (q, r) = total.div_rem(&BigInt::from(k));
    debug_assert_eq!(r, BigInt::from(0));
    q.to_u64().expect("Witt dimension exceeds u64")
}

/// Split point of the standard factorization `w = u v`, where `v` is the longest proper
/// Lyndon suffix. `None` for single letters.
pub fn standard_split(w: &[Letter]) -> Option<usize> {
    (1..w.len()).find(|&i| is_lyndon(&w[i..]))
}

/// Binary bracket tree whose leaves, read left to right, spell a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTree {
    Leaf(Letter),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn leaves(&self) -> Word {
        let mut out = Word::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Word) {
        match self {
            BracketTree::Leaf(l) => out.push(*l),
            BracketTree::Node(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayTree { tree: self, alphabet }
    }
}

struct DisplayTree<'a> {
    tree: &'a BracketTree,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayTree<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            BracketTree::Leaf(l) => f.write_str(self.alphabet.label(*l)),
            BracketTree::Node(a, b) => write!(f, "[{},{}]", a.display(self.alphabet), b.display(self.alphabet)),
        }
    }
}

/// The bracketing of a Lyndon word obtained by recursing on its standard factorization.
pub fn standard_bracketing(w: &[Letter]) -> Result<BracketTree, FreeLieError> {
    if !is_lyndon(w) {
        return Err(FreeLieError::NotLyndon(format!("{w:?}")));
    }
    Ok(bracketing_unchecked(w))
}

fn bracketing_unchecked(w: &[Letter]) -> BracketTree {
    match standard_split(w) {
        None => BracketTree::Leaf(w[0]),
        Some(i) => BracketTree::Node(Box::new(bracketing_unchecked(&w[..i])), Box::new(bracketing_unchecked(&w[i..]))),
    }
}

/// Tensor expansion of a Lyndon bracket: sorted `(word, coefficient)` pairs.
pub type Expansion = Rc<Vec<(Word, i64)>>;

thread_local! {
    static EXPANSIONS: RefCell<HashMap<Word, Expansion>> = RefCell::new(HashMap::new());
}

/// Expansion of the standard bracketing of the Lyndon word `w` under `[x,y] -> xy - yx`.
///
/// Cached per thread. The caller guarantees `w` is Lyndon.
pub fn lyndon_expansion(w: &[Letter]) -> Expansion {
    if let Some(e) = EXPANSIONS.with(|c| c.borrow().get(w).cloned()) {
        return e;
    }
    let exp = match standard_split(w) {
        None => Rc::new(vec![(Word::from_slice(w), 1)]),
        Some(i) => {
            let left = lyndon_expansion(&w[..i]);
            let right = lyndon_expansion(&w[i..]);
            let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
            for (sign, (x, y)) in [(1, (&left, &right)), (-1, (&right, &left))] {
                for (a, ca) in x.iter() {
                    for (b, cb) in y.iter() {
                        let mut word = a.clone();
                        word.extend_from_slice(b);
                        *acc.entry(word).or_insert(0) += sign * ca * cb;
                    }
                }
            }
            Rc::new(acc.into_iter().filter(|(_, c)| *c != 0).collect())
        }
    };
    EXPANSIONS.with(|c| c.borrow_mut().insert(Word::from_slice(w), exp.clone()));
    exp
}
