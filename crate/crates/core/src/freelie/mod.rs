//! The free Lie ring on an ordered alphabet, in Lyndon-basis normal form, together with its
//! embedding into the tensor ring.

mod alphabet;
mod element;
mod json;
mod lyndon;
mod rewrite;

use thiserror::Error;

pub use alphabet::{Alphabet, Letter, Word};
pub use element::{left_normed, LetterImage, LieElement, TensorElement};
pub use json::{ElementJson, TermJson};
pub use lyndon::{
    is_lyndon, lyndon_expansion, lyndon_words, standard_bracketing, standard_split, witt_dimension, BracketTree,
    Expansion,
};

/// Degrees above this need an explicit opt-in from callers that enumerate bases.
pub const DEFAULT_DEGREE_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeLieError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("alphabet has {0} letters; at most 255 are supported")]
    AlphabetTooLarge(usize),
    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid generator label `{0}`")]
    BadLabel(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("`{0}` is not a Lyndon word")]
    NotLyndon(String),
    #[error("not a Lie element: residue on word `{0}`")]
    NotALieElement(String),
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid coefficient `{0}`")]
    BadCoefficient(String),
    #[error("alphabet does not match")]
    AlphabetMismatch,
}

#[cfg(test)]
mod tests;
