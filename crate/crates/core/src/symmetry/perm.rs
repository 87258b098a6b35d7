use std::fmt;
use std::str::FromStr;

/// A permutation of `{1, 2, 3}`; `images[i]` is the image of `i + 1`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct S3Element {
    images: [u8; 3],
}

impl S3Element {
    pub const IDENTITY: S3Element = S3Element { images: [0, 1, 2] };
    pub const T12: S3Element = S3Element { images: [1, 0, 2] };
    pub const T13: S3Element = S3Element { images: [2, 1, 0] };
    pub const T23: S3Element = S3Element { images: [0, 2, 1] };
    /// `1 -> 2 -> 3 -> 1`.
    pub const C123: S3Element = S3Element { images: [1, 2, 0] };
    pub const C132: S3Element = S3Element { images: [2, 0, 1] };

    /// From the images of `1, 2, 3` (1-based).
    pub fn from_images(images: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        let mut out = [0u8; 3];
        for (slot, &v) in out.iter_mut().zip(&images) {
            if !(1..=3).contains(&v) || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
            *slot = (v - 1) as u8;
        }
        Some(S3Element { images: out })
    }

    pub fn all() -> [S3Element; 6] {
        [Self::IDENTITY, Self::T12, Self::T13, Self::T23, Self::C123, Self::C132]
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        usize::from(self.images[i - 1]) + 1
    }

    /// Image of the 0-based index `i`.
    pub fn apply0(&self, i: usize) -> usize {
        usize::from(self.images[i])
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &S3Element) -> S3Element {
        S3Element { images: other.images.map(|i| self.images[usize::from(i)]) }
    }

    pub fn inverse(&self) -> S3Element {
        let mut images = [0u8; 3];
        for (i, &v) in self.images.iter().enumerate() {
            images[usize::from(v)] = i as u8;
        }
        S3Element { images }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn order(&self) -> usize {
        (1..=6).find(|&k| (1..k).fold(*self, |acc, _| acc.compose(self)).is_identity()).expect("order divides 6")
    }

    pub fn sign(&self) -> i64 {
        if self.order() == 2 {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for S3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.images {
            [0, 1, 2] => f.write_str("id"),
            [1, 0, 2] => f.write_str("(12)"),
            [2, 1, 0] => f.write_str("(13)"),
            [0, 2, 1] => f.write_str("(23)"),
            [1, 2, 0] => f.write_str("(123)"),
            _ => f.write_str("(132)"),
        }
    }
}

impl FromStr for S3Element {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        S3Element::all()
            .into_iter()
            .find(|g| g.to_string() == s.trim())
            .ok_or_else(|| format!("unknown permutation `{s}` (use id, (12), (13), (23), (123), (132))"))
    }
}
