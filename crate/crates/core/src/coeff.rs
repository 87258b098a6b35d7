//! Coefficient rings: arbitrary-precision integers (default) and exact rationals.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed};
use serde::{Deserialize, Serialize};

/// Selects the coefficient ring used by a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    #[default]
    Integers,
    Rationals,
}

impl FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "z" | "Z" | "integers" => Ok(Ring::Integers),
            "q" | "Q" | "rationals" => Ok(Ring::Rationals),
            other => Err(format!("unknown ring `{other}` (expected z or q)")),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Integers => "z",
            Ring::Rationals => "q",
        })
    }
}

/// An exact coefficient ring. Implemented for [`BigInt`] and [`BigRational`].
pub trait Coeff: Num + Signed + Clone + fmt::Debug + fmt::Display + Hash + Send + Sync + 'static {
    const RING: Ring;

    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: BigInt) -> Self;
    /// Parses `"-12"` (and `"3/4"` for rationals).
    fn parse_coeff(s: &str) -> Option<Self>;
    /// Returns the value as an integer when it is one.
    fn as_integer(&self) -> Option<BigInt>;
    fn to_rational(&self) -> BigRational;
    /// `None` when the value does not lie in this ring.
    fn from_rational(v: &BigRational) -> Option<Self>;
}

impl Coeff for BigInt {
    const RING: Ring = Ring::Integers;

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn from_bigint(v: BigInt) -> Self {
        v
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        BigInt::from_str(s.trim()).ok()
    }

    fn as_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn from_rational(v: &BigRational) -> Option<Self> {
        v.is_integer().then(|| v.numer().clone())
    }
}

impl Coeff for BigRational {
    const RING: Ring = Ring::Rationals;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).ok()?;
                let d = BigInt::from_str(d.trim()).ok()?;
                if d == BigInt::from(0) {
                    return None;
                }
                Some(BigRational::new(n, d))
            }
            None => BigInt::from_str(s).ok().map(BigRational::from_integer),
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        if self.denom().is_one() {
            Some(self.numer().clone())
        } else {
            None
        }
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_rational(v: &BigRational) -> Option<Self> {
        Some(v.clone())
    }
}
