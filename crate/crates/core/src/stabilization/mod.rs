//! Split injections `iota_I` and projections `pi_J` between three strands and `n`
//! strands, on McCool symbols and on derivations, and the independence
//! certificate for the family `iota_I(omega)`.

#[cfg(test)]
mod tests;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::derivations::{generators, Derivation, DerivationError};
use crate::freelie::{Letter, LetterImage, LieElement};
use crate::johnson::{omega, JohnsonError, LiePolynomial, SymbolSet, TauEngine};

/// Largest `n` accepted by [`independence_certificate`].
pub const MAX_CERTIFICATE_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StabilizationError {
    #[error("{0:?} is not a strictly increasing triple in 1..={1}")]
    BadTriple(Vec<usize>, usize),
    #[error("expected n in 3..={max}, got {n}")]
    Size { n: usize, max: usize },
    #[error("polynomial is not over the expected symbols")]
    WrongAlphabet,
    #[error(transparent)]
    Johnson(#[from] JohnsonError),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
}

/// `I = {i1 < i2 < i3}` inside `{1, ..., n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexTriple {
    n: usize,
    idx: [usize; 3],
}

impl IndexTriple {
    pub fn new(n: usize, idx: [usize; 3]) -> Result<Self, StabilizationError> {
        if idx[0] == 0 || idx[0] >= idx[1] || idx[1] >= idx[2] || idx[2] > n {
            return Err(StabilizationError::BadTriple(idx.to_vec(), n));
        }
        Ok(IndexTriple { n, idx })
    }

    /// All triples in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    out.push(IndexTriple { n, idx: [a, b, c] });
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> [usize; 3] {
        self.idx
    }

    /// `i_s` for `s` in `1..=3`.
    pub fn at(&self, s: usize) -> usize {
        self.idx[s - 1]
    }

    /// `s` with `i_s = i`.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.idx.iter().position(|&x| x == i).map(|p| p + 1)
    }
}

impl fmt::Display for IndexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.idx[0], self.idx[1], self.idx[2])
    }
}

/// Parses `n:i,j,k`, e.g. `4:1,2,4`.
impl FromStr for IndexTriple {
    type Err = StabilizationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || StabilizationError::BadTriple(Vec::new(), 0);
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let v: Vec<usize> = rest.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
        let idx: [usize; 3] = v.clone().try_into().map_err(|_| StabilizationError::BadTriple(v, n))?;
        IndexTriple::new(n, idx)
    }
}

/// Three-strand symbols a polynomial is written in: `a, b, c` or all six `k_st`.
fn three_strand_symbols(p: &LiePolynomial) -> Result<SymbolSet, StabilizationError> {
    [SymbolSet::abc(), SymbolSet::mccool(3)]
        .into_iter()
        .find(|s| s.alphabet() == p.alphabet())
        .ok_or(StabilizationError::WrongAlphabet)
}

fn letter(l: Letter) -> LetterImage<BigInt> {
    vec![(l, BigInt::one())]
}

/// `k_st -> k_{i_s i_t}`, into the symbols of `L(PSigma_n)`.
pub fn iota_sym(i: &IndexTriple, p: &LiePolynomial) -> Result<LiePolynomial, StabilizationError> {
    let source = three_strand_symbols(p)?;
    let target = SymbolSet::mccool(i.n);
    let images: Vec<_> =
        source.pairs().iter().map(|&(s, t)| letter(target.letter(i.at(s), i.at(t)).expect("symbol exists"))).collect();
    Ok(p.substitute(target.alphabet(), &images))
}

/// `k_ij -> k_{pos(i) pos(j)}` when both indices lie in `J`, else `0`; lands in the six
/// three-strand symbols.
pub fn pi_sym(j: &IndexTriple, q: &LiePolynomial) -> Result<LiePolynomial, StabilizationError> {
    let source = SymbolSet::mccool(j.n);
    if q.alphabet() != source.alphabet() {
        return Err(StabilizationError::WrongAlphabet);
    }
    let target = SymbolSet::mccool(3);
    let images: Vec<_> = source
        .pairs()
        .iter()
        .map(|&(a, b)| match (j.position(a), j.position(b)) {
            (Some(s), Some(t)) => letter(target.letter(s, t).expect("symbol exists")),
            _ => Vec::new(),
        })
        .collect();
    Ok(q.substitute(target.alphabet(), &images))
}

/// `a, b, c` rewritten as `k12, k21, k13`.
pub fn abc_as_mccool(p: &LiePolynomial) -> Result<LiePolynomial, StabilizationError> {
    let source = SymbolSet::abc();
    if p.alphabet() != source.alphabet() {
        return Err(StabilizationError::WrongAlphabet);
    }
    let target = SymbolSet::mccool(3);
    let images: Vec<_> =
        source.pairs().iter().map(|&(s, t)| letter(target.letter(s, t).expect("symbol exists"))).collect();
    Ok(p.substitute(target.alphabet(), &images))
}

/// `X_{i_s} -> eta(d(X_s))`, other generators to `0`.
pub fn iota_der(i: &IndexTriple, d: &Derivation) -> Result<Derivation, StabilizationError> {
    if d.n() != 3 {
        return Err(StabilizationError::Size { n: d.n(), max: 3 });
    }
    let xs = generators(i.n);
    let eta: Vec<_> = (1..=3).map(|s| letter((i.at(s) - 1) as Letter)).collect();
    let mut images = vec![LieElement::zero(&xs, d.degree() + 1); i.n];
    for s in 1..=3 {
        images[i.at(s) - 1] = d.image(s - 1).substitute(&xs, &eta);
    }
    Ok(Derivation::new(&xs, d.degree(), images)?)
}

/// The derivation induced on `L[n] / (X_j : j not in J) = L[3]`.
pub fn pi_der(j: &IndexTriple, d: &Derivation) -> Result<Derivation, StabilizationError> {
    if d.n() != j.n {
        return Err(StabilizationError::Size { n: d.n(), max: j.n });
    }
    let x3 = generators(3);
    let quotient: Vec<_> =
        (1..=j.n).map(|i| j.position(i).map(|s| letter((s - 1) as Letter)).unwrap_or_default()).collect();
    let images = (1..=3).map(|s| d.image(j.at(s) - 1).substitute(&x3, &quotient)).collect();
    Ok(Derivation::new(&x3, d.degree(), images)?)
}

/// One cell of the projection grid: `pi_J(iota_I(omega))` against `delta_IJ omega`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub i: IndexTriple,
    pub j: IndexTriple,
    /// `1` if the projection equals `omega`, `0` if it vanishes, `null` otherwise.
    pub value: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceCertificate {
    pub n: usize,
    pub count: usize,
    pub triples: Vec<IndexTriple>,
    /// Every `iota_I(omega)` is nonzero.
    pub nonzero: bool,
    /// `tau_n` kills every `iota_I(omega)`.
    pub tau_vanishes: Vec<bool>,
    pub grid: Vec<GridCell>,
    pub verified: bool,
}

/// Certifies that the `binom(n, 3)` elements `iota_I(omega)` are independent in the
/// kernel of `tau_n` in degree 6: each is killed by `tau_n`, and projecting by `pi_J`
/// yields `delta_IJ omega`.
pub fn independence_certificate(n: usize) -> Result<IndependenceCertificate, StabilizationError> {
    if !(3..=MAX_CERTIFICATE_N).contains(&n) {
        return Err(StabilizationError::Size { n, max: MAX_CERTIFICATE_N });
    }
    let w = omega();
    let w3 = abc_as_mccool(&w)?;
    let triples = IndexTriple::all(n);
    let family = triples.iter().map(|i| iota_sym(i, &w)).collect::<Result<Vec<_>, _>>()?;
    let engine = TauEngine::new(SymbolSet::mccool(n));
    let tau_vanishes =
        family.par_iter().map(|p| Ok(engine.evaluate(p)?.is_zero())).collect::<Result<Vec<_>, StabilizationError>>()?;
    let pairs: Vec<(usize, usize)> = (0..triples.len()).flat_map(|a| (0..triples.len()).map(move |b| (a, b))).collect();
    let grid = pairs
        .par_iter()
        .map(|&(a, b)| {
            let image = pi_sym(&triples[b], &family[a])?;
            let value = if image == w3 {
                Some(1)
            } else if image.is_zero() {
                Some(0)
            } else {
                None
            };
            Ok(GridCell { i: triples[a], j: triples[b], value })
        })
        .collect::<Result<Vec<_>, StabilizationError>>()?;
    let nonzero = family.iter().all(|p| !p.is_zero());
    let diagonal = grid.iter().all(|c| c.value == Some(u8::from(c.i == c.j)));
    let verified = nonzero && diagonal && tau_vanishes.iter().all(|&t| t);
    Ok(IndependenceCertificate { n, count: triples.len(), triples, nonzero, tau_vanishes, grid, verified })
}
