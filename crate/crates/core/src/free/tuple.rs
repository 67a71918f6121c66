use super::{FreeWord, WordError};
use std::fmt;

/// An element of `F_k x F_k` or `F_k x F_k x F_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TupleWord {
    components: Vec<FreeWord>,
}

impl TupleWord {
    pub fn new(components: Vec<FreeWord>) -> Result<Self, WordError> {
        if !(2..=3).contains(&components.len()) {
            return Err(WordError::BadArity(components.len()));
        }
        let rank = components[0].rank();
        if let Some(c) = components.iter().find(|c| c.rank() != rank) {
            return Err(WordError::AlphabetMismatch {
                left: rank,
                right: c.rank(),
            });
        }
        Ok(TupleWord { components })
    }

    /// `(w, w)` or `(w, w, w)`.
    pub fn diagonal(w: &FreeWord, arity: usize) -> Result<Self, WordError> {
        TupleWord::new(vec![w.clone(); arity])
    }

    pub fn identity(rank: usize, arity: usize) -> Result<Self, WordError> {
        TupleWord::new(vec![FreeWord::identity(rank); arity])
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }
    pub fn rank(&self) -> usize {
        self.components[0].rank()
    }
    pub fn components(&self) -> &[FreeWord] {
        &self.components
    }
    pub fn is_identity(&self) -> bool {
        self.components.iter().all(FreeWord::is_identity)
    }

    pub fn mul(&self, other: &TupleWord) -> Result<TupleWord, WordError> {
        if self.arity() != other.arity() {
            return Err(WordError::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(u, v)| u.mul(v))
            .collect::<Result<_, _>>()?;
        Ok(TupleWord { components })
    }

    pub fn inverse(&self) -> TupleWord {
        TupleWord {
            components: self.components.iter().map(FreeWord::inverse).collect(),
        }
    }

    /// Parses `(ab, 1)` or `(a, b, a b')`.
    pub fn parse(rank: usize, text: &str) -> Result<Self, WordError> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| WordError::parse(text, "expected a parenthesized tuple"))?;
        let components = inner
            .split(',')
            .map(|c| FreeWord::parse(rank, c))
            .collect::<Result<Vec<_>, _>>()?;
        TupleWord::new(components)
    }
}

impl fmt::Display for TupleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TupleWord {
        TupleWord::parse(2, s).unwrap()
    }

    #[test]
    fn componentwise_law() {
        assert!(t("(a,b)").mul(&t("(a',b')")).unwrap().is_identity());
        assert_eq!(t("(a,a)").mul(&t("(b,b)")).unwrap(), t("(ab,ab)"));
        assert_eq!(t("(1,1,b b)").mul(&t("(a,a,a)")).unwrap(), t("(a,a,bba)"));
        assert!(t("(a,b)").mul(&t("(a,b,1)")).is_err());
        assert!(TupleWord::parse(2, "(a)").is_err());
        assert!(TupleWord::parse(2, "a,b").is_err());
    }

    #[test]
    fn display_round_trip() {
        let x = t("(ab', 1, b)");
        assert_eq!(x.to_string(), "(a b', 1, b)");
        assert_eq!(t(&x.to_string()), x);
    }
}
