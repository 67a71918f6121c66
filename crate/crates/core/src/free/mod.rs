//! Free groups `F_k`, their direct powers, and the embedding `F_k -> F_2`.

mod enumerate;
mod text;
mod tuple;

pub use enumerate::{enumerate_reduced, ReducedWords};
pub use tuple::TupleWord;

use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet mismatch: rank {left} vs rank {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("letter {letter} outside an alphabet of rank {rank}")]
    LetterOutOfRange { letter: i32, rank: usize },
    #[error("alphabet rank must be at least 1")]
    EmptyAlphabet,
    #[error("tuple arity must be 2 or 3, got {0}")]
    BadArity(usize),
    #[error("the identity has no primitive root")]
    Identity,
    #[error("cannot parse word {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

impl WordError {
    pub(crate) fn parse(text: &str, reason: impl Into<String>) -> Self {
        WordError::Parse {
            text: text.to_string(),
            reason: reason.into(),
        }
    }
}

/// A freely reduced word in `F_k`. Letters are signed generator indices
/// `±1..=±k`; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

/// Position of a letter in the order `x1 < x1' < x2 < x2' < ...`.
pub fn letter_rank(letter: i32) -> usize {
    2 * (letter.unsigned_abs() as usize - 1) + usize::from(letter < 0)
}

/// Inverse of [`letter_rank`].
pub fn letter_at(rank: usize) -> i32 {
    let g = (rank / 2 + 1) as i32;
    if rank % 2 == 0 {
        g
    } else {
        -g
    }
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// Reduces an arbitrary letter sequence.
    pub fn new(rank: usize, letters: &[i32]) -> Result<Self, WordError> {
        if rank == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        let mut w = FreeWord::identity(rank);
        for &l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(WordError::LetterOutOfRange { letter: l, rank });
            }
            w.push(l);
        }
        Ok(w)
    }

    /// The generator `x_i` (1-based).
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        FreeWord {
            rank,
            letters: vec![i as i32],
        }
    }

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }
    pub fn len(&self) -> usize {
        self.letters.len()
    }
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord, WordError> {
        if self.rank != other.rank {
            return Err(WordError::AlphabetMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..n.unsigned_abs() {
            for &l in &base.letters {
                out.push(l);
            }
        }
        out
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += i64::from(l.signum());
        }
        sums
    }

    /// Splits `w = c * core * c^-1` with `core` cyclically reduced.
    pub fn cyclic_reduction(&self) -> (FreeWord, FreeWord) {
        let n = self.letters.len();
        let mut i = 0;
        while i + 1 < n - i && self.letters[i] == -self.letters[n - 1 - i] {
            i += 1;
        }
        let conj = FreeWord {
            rank: self.rank,
            letters: self.letters[..i].to_vec(),
        };
        let core = FreeWord {
            rank: self.rank,
            letters: self.letters[i..n - i].to_vec(),
        };
        (conj, core)
    }

    /// Returns `(root, e)` with `w = root^e` and `root` not a proper power.
    /// The centralizer of `w` in the free group is generated by `root`.
    pub fn primitive_root(&self) -> Result<(FreeWord, u32), WordError> {
        if self.is_identity() {
            return Err(WordError::Identity);
        }
        let (conj, core) = self.cyclic_reduction();
        let n = core.len();
        let period = (1..=n)
            .find(|&p| n % p == 0 && (p..n).all(|i| core.letters[i] == core.letters[i - p]))
            .unwrap_or(n);
        let prefix = FreeWord {
            rank: self.rank,
            letters: core.letters[..period].to_vec(),
        };
        let root = conj
            .mul(&prefix)
            .and_then(|r| r.mul(&conj.inverse()))
            .expect("same rank");
        Ok((root, (n / period) as u32))
    }

    /// Whether the two words commute in the free group.
    pub fn commutes_with(&self, other: &FreeWord) -> bool {
        match (self.primitive_root(), other.primitive_root()) {
            (Ok((r, _)), Ok((s, _))) => r == s || r == s.inverse(),
            _ => true,
        }
    }

    /// Image under `x_i -> a^(i-1) b a^-(i-1)`, an injective homomorphism
    /// into `F_2`.
    pub fn embed_in_f2(&self) -> FreeWord {
        let mut out = FreeWord::identity(2);
        for &l in &self.letters {
            let shift = l.unsigned_abs() as usize - 1;
            for _ in 0..shift {
                out.push(1);
            }
            out.push(2 * l.signum());
            for _ in 0..shift {
                out.push(-1);
            }
        }
        out
    }

    /// Substitutes the given words for the generators.
    pub fn substitute(&self, images: &[FreeWord]) -> Result<FreeWord, WordError> {
        if images.len() != self.rank {
            return Err(WordError::AlphabetMismatch {
                left: self.rank,
                right: images.len(),
            });
        }
        let target = images.first().map_or(1, FreeWord::rank);
        let mut out = FreeWord::identity(target);
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            let piece = if l > 0 { img.clone() } else { img.inverse() };
            out = out.mul(&piece)?;
        }
        Ok(out)
    }

    /// Renders with `x1 .. xk` letters regardless of rank.
    pub fn to_x_string(&self) -> String {
        text::format_letters(&self.letters, false)
    }
}

/// Shortlex order: length first, then letters under `x1 < x1' < x2 < ...`.
impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| {
                let a = self.letters.iter().map(|&l| letter_rank(l));
                let b = other.letters.iter().map(|&l| letter_rank(l));
                a.cmp(b)
            })
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_letters(&self.letters, self.rank == 2))
    }
}

impl FreeWord {
    /// Parses `a b a' b'`, `x1 x2'`, `x1^2`, `ab` or `1` over the given rank.
    pub fn parse(rank: usize, text: &str) -> Result<Self, WordError> {
        let letters = text::parse_letters(text)?;
        FreeWord::new(rank, &letters)
    }
}
