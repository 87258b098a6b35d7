use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Derivation, DerivationError};
use crate::coeff::Coeff;
use crate::freelie::{Alphabet, ElementJson, LieElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub n: usize,
    pub degree: usize,
    pub images: Vec<ElementJson>,
}

impl<R: Coeff> Derivation<R> {
    pub fn to_json(&self) -> DerivationJson {
        DerivationJson {
            n: self.n(),
            degree: self.degree,
            images: self.images.iter().map(LieElement::to_json).collect(),
        }
    }

    pub fn from_json(json: &DerivationJson) -> Result<Self, DerivationError> {
        let first = json.images.first().ok_or(DerivationError::ImageCount { expected: json.n, found: 0 })?;
        let alphabet = Arc::new(Alphabet::new(first.alphabet.iter().cloned())?);
        if alphabet.size() != json.n {
            return Err(DerivationError::ImageCount { expected: json.n, found: alphabet.size() });
        }
        let images =
            json.images.iter().map(|j| LieElement::from_json_in(&alphabet, j)).collect::<Result<Vec<_>, _>>()?;
        Self::new(&alphabet, json.degree, images)
    }
}
