use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use super::FreeLieError;

/// Index of a generator inside its [`Alphabet`]; the order of letters is the order of indices.
pub type Letter = u8;

/// A word over an alphabet, stored as letter indices.
pub type Word = SmallVec<[Letter; 16]>;

/// An ordered, finite set of generator names.
#[derive(Clone)]
pub struct Alphabet {
    labels: Vec<String>,
    lookup: HashMap<String, Letter>,
    single_char: bool,
}

impl Alphabet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, FreeLieError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(FreeLieError::EmptyAlphabet);
        }
        if labels.len() > usize::from(Letter::MAX) {
            return Err(FreeLieError::AlphabetTooLarge(labels.len()));
        }
        let mut lookup = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(['.', ' ', '"']) {
                return Err(FreeLieError::BadLabel(l.clone()));
            }
            if lookup.insert(l.clone(), i as Letter).is_some() {
                return Err(FreeLieError::DuplicateLabel(l.clone()));
            }
        }
        let single_char = labels.iter().all(|l| l.chars().count() == 1);
        Ok(Alphabet { labels, lookup, single_char })
    }

    /// `prefix1, ..., prefixN`, e.g. `X1..Xn`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("numbered labels are distinct")
    }

    /// The three-letter alphabet `a < b < c`.
    pub fn abc() -> Self {
        Self::new(["a", "b", "c"]).expect("distinct")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, letter: Letter) -> &str {
        &self.labels[usize::from(letter)]
    }

    pub fn letter(&self, label: &str) -> Option<Letter> {
        self.lookup.get(label).copied()
    }

    pub fn contains_word(&self, w: &[Letter]) -> bool {
        w.iter().all(|&l| usize::from(l) < self.labels.len())
    }

    /// Letters are concatenated when every label is one character, and joined with `.` otherwise.
    pub fn format_word(&self, w: &[Letter]) -> String {
        let sep = if self.single_char { "" } else { "." };
        w.iter().map(|&l| self.label(l)).collect::<Vec<_>>().join(sep)
    }

    pub fn parse_word(&self, s: &str) -> Result<Word, FreeLieError> {
        let unknown = |l: &str| FreeLieError::UnknownLetter(l.to_string());
        if self.single_char {
            s.chars()
                .map(|c| {
                    let mut buf = [0u8; 4];
                    let l = c.encode_utf8(&mut buf);
                    self.letter(l).ok_or_else(|| unknown(l))
                })
                .collect()
        } else {
            s.split('.').map(|l| self.letter(l).ok_or_else(|| unknown(l))).collect()
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_must_be_distinct() {
        assert!(matches!(Alphabet::new(["a", "a"]), Err(FreeLieError::DuplicateLabel(_))));
        assert!(matches!(Alphabet::new(Vec::<String>::new()), Err(FreeLieError::EmptyAlphabet)));
    }

    #[test]
    fn word_formatting() {
        let abc = Alphabet::abc();
        let w = abc.parse_word("ccbbaa").unwrap();
        assert_eq!(w.as_slice(), &[2, 2, 1, 1, 0, 0]);
        assert_eq!(abc.format_word(&w), "ccbbaa");

        let x = Alphabet::numbered("X", 3);
        let w = x.parse_word("X1.X3").unwrap();
        assert_eq!(w.as_slice(), &[0, 2]);
        assert_eq!(x.format_word(&w), "X1.X3");
        assert!(x.parse_word("X4").is_err());
    }
}
