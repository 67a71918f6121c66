//! Finite presentations, word-problem oracles and Mihailova generating sets.

mod oracle;
pub mod samples;

pub use oracle::{Permutation, WordOracle};

use crate::free::{FreeWord, TupleWord, WordError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("relator {0} is the empty word")]
    EmptyRelator(usize),
    #[error("relator {index} is over rank {rank}, expected {k}")]
    RelatorRank { index: usize, rank: usize, k: usize },
    #[error("oracle {kind} does not fit the presentation: {reason}")]
    IncompatibleOracle { kind: String, reason: String },
    #[error("presentation {0} has no word-problem oracle")]
    NoOracle(String),
    #[error("not a permutation: {0:?}")]
    BadPermutation(Vec<usize>),
    #[error("Mihailova arity must be 2 or 3, got {0}")]
    BadArity(usize),
    #[error("torsion query on the identity word")]
    IdentityQuery,
    #[error("unknown sample presentation {0:?}")]
    UnknownSample(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// `<x1, ..., xk | r1, ..., rm>` with an optional word-problem oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    k: usize,
    relators: Vec<FreeWord>,
    oracle: Option<WordOracle>,
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        k: usize,
        relators: Vec<FreeWord>,
        oracle: Option<WordOracle>,
    ) -> Result<Self, PresentationError> {
        if k == 0 {
            return Err(PresentationError::NoGenerators);
        }
        for (index, r) in relators.iter().enumerate() {
            if r.rank() != k {
                return Err(PresentationError::RelatorRank {
                    index,
                    rank: r.rank(),
                    k,
                });
            }
            if r.is_identity() {
                return Err(PresentationError::EmptyRelator(index));
            }
        }
        if let Some(o) = &oracle {
            o.check(k, &relators)?;
        }
        Ok(Presentation {
            name: name.into(),
            k,
            relators,
            oracle,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn generators(&self) -> usize {
        self.k
    }
    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }
    pub fn oracle(&self) -> Option<&WordOracle> {
        self.oracle.as_ref()
    }

    fn check_word(&self, w: &FreeWord) -> Result<(), PresentationError> {
        if w.rank() != self.k {
            return Err(WordError::AlphabetMismatch {
                left: self.k,
                right: w.rank(),
            }
            .into());
        }
        Ok(())
    }

    /// Whether `w = 1` in the presented group, according to the oracle.
    pub fn is_identity(&self, w: &FreeWord) -> Result<bool, PresentationError> {
        self.check_word(w)?;
        let oracle = self
            .oracle
            .as_ref()
            .ok_or_else(|| PresentationError::NoOracle(self.name.clone()))?;
        Ok(oracle.decide(w))
    }

    /// Whether `w^n = 1` for some `1 <= n <= bound`.
    pub fn has_torsion(&self, w: &FreeWord, bound: u32) -> Result<bool, PresentationError> {
        self.check_word(w)?;
        if w.is_identity() {
            return Err(PresentationError::IdentityQuery);
        }
        let mut power = FreeWord::identity(self.k);
        for _ in 0..bound {
            power = power.mul(w)?;
            if self.is_identity(&power)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Length of the shortest relator, if any.
    pub fn min_relator_len(&self) -> Option<usize> {
        self.relators.iter().map(FreeWord::len).min()
    }
}

/// Finite generating set of a Mihailova subgroup, pushed into `F_2`
/// powers through the embedding `F_k -> F_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MihailovaGens {
    arity: usize,
    generators: Vec<TupleWord>,
}

impl MihailovaGens {
    pub fn arity(&self) -> usize {
        self.arity
    }
    pub fn generators(&self) -> &[TupleWord] {
        &self.generators
    }
    pub fn len(&self) -> usize {
        self.generators.len()
    }
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Diagonal generators `(x_i, x_i[, x_i])` followed by relator insertions
/// `(1, r_j)` or `(1, 1, r_j)`.
pub fn mihailova(p: &Presentation, arity: usize) -> Result<MihailovaGens, PresentationError> {
    if !(2..=3).contains(&arity) {
        return Err(PresentationError::BadArity(arity));
    }
    let mut generators = Vec::with_capacity(p.k + p.relators.len());
    for i in 1..=p.k {
        let x = FreeWord::generator(p.k, i).embed_in_f2();
        generators.push(TupleWord::diagonal(&x, arity)?);
    }
    for r in &p.relators {
        let mut comps = vec![FreeWord::identity(2); arity - 1];
        comps.push(r.embed_in_f2());
        generators.push(TupleWord::new(comps)?);
    }
    Ok(MihailovaGens { arity, generators })
}
