use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::alphabet::Alphabet;
use super::element::{LieElement, TensorElement};
use super::FreeLieError;
use crate::coeff::Coeff;

/// Wire form shared by Lie and tensor elements. Coefficients are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub alphabet: Vec<String>,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: String,
    pub coeff: String,
}

fn encode<'a, R: Coeff>(
    alphabet: &Alphabet,
    degree: usize,
    terms: impl Iterator<Item = (&'a super::Word, &'a R)>,
) -> ElementJson {
    ElementJson {
        alphabet: alphabet.labels().to_vec(),
        degree,
        terms: terms.map(|(w, c)| TermJson { word: alphabet.format_word(w), coeff: c.to_string() }).collect(),
    }
}

type Decoded<R> = (Arc<Alphabet>, Vec<(super::Word, R)>);

fn decode_terms<R: Coeff>(json: &ElementJson) -> Result<Decoded<R>, FreeLieError> {
    let alphabet = Arc::new(Alphabet::new(json.alphabet.iter().cloned())?);
    let terms = json
        .terms
        .iter()
        .map(|t| {
            let w = alphabet.parse_word(&t.word)?;
            let c = R::parse_coeff(&t.coeff).ok_or_else(|| FreeLieError::BadCoefficient(t.coeff.clone()))?;
            Ok((w, c))
        })
        .collect::<Result<Vec<_>, FreeLieError>>()?;
    Ok((alphabet, terms))
}

impl<R: Coeff> LieElement<R> {
    pub fn to_json(&self) -> ElementJson {
        encode(self.alphabet(), self.degree(), self.terms())
    }

    pub fn from_json(json: &ElementJson) -> Result<Self, FreeLieError> {
        let (alphabet, terms) = decode_terms(json)?;
        Self::from_terms(&alphabet, json.degree, terms)
    }

    /// Reads against a known alphabet, which must carry the same labels.
    pub fn from_json_in(alphabet: &Arc<Alphabet>, json: &ElementJson) -> Result<Self, FreeLieError> {
        if alphabet.labels() != json.alphabet.as_slice() {
            return Err(FreeLieError::AlphabetMismatch);
        }
        let (_, terms) = decode_terms(json)?;
        Self::from_terms(alphabet, json.degree, terms)
    }
}

impl<R: Coeff> TensorElement<R> {
    pub fn to_json(&self) -> ElementJson {
        encode(self.alphabet(), self.degree(), self.terms())
    }

    pub fn from_json(json: &ElementJson) -> Result<Self, FreeLieError> {
        let (alphabet, terms) = decode_terms(json)?;
        Self::from_terms(&alphabet, json.degree, terms)
    }
}
