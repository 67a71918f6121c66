use crate::free::letter_at;
use std::fmt;
use std::str::FromStr;

/// A word in the generators `g1, g2, ...` of a problem instance and their
/// inverses. Letters are signed 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GenWord(Vec<i32>);

impl GenWord {
    pub fn new(letters: Vec<i32>) -> Self {
        GenWord(letters)
    }
    pub fn identity() -> Self {
        GenWord(Vec::new())
    }
    pub fn letters(&self) -> &[i32] {
        &self.0
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    /// Largest generator index used.
    pub fn max_generator(&self) -> usize {
        self.0
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn from_ranks(ranks: impl Iterator<Item = usize>) -> Self {
        GenWord(ranks.map(letter_at).collect())
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "g{}", l.unsigned_abs())?;
            if l < 0 {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse generator word {0:?}")]
pub struct GenWordParseError(pub String);

impl FromStr for GenWord {
    type Err = GenWordParseError;

    /// Parses `g3 g1' g2` or `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GenWordParseError(s.to_string());
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (body, inverse) = match tok.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let i: i32 = body
                .strip_prefix('g')
                .ok_or_else(err)?
                .parse()
                .map_err(|_| err())?;
            if i < 1 {
                return Err(err());
            }
            letters.push(if inverse { -i } else { i });
        }
        if letters.is_empty() && s.trim() != "1" {
            return Err(err());
        }
        Ok(GenWord(letters))
    }
}
