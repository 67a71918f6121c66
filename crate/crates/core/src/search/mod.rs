//! Bounded breadth-first search of finitely generated matrix groups.

mod explore;
mod word;

pub use explore::{explore, Control, ExploreStats, Visit};
pub use word::{GenWord, GenWordParseError};

use crate::arith::{ArithError, Invertible, Matrix};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("predicate {predicate} does not apply to {kind} instances")]
    PredicateMismatch {
        predicate: Predicate,
        kind: &'static str,
    },
    #[error("search depth must be at least 1")]
    ZeroDepth,
    #[error("word uses generator g{index} but the instance has {count}")]
    UnknownGenerator { index: usize, count: usize },
    #[error("instance has no generators")]
    NoGenerators,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Conditions a group element can be tested for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    MapsVIntoH,
    NonidentityMapsVIntoH,
    NonidentityFixesV,
    CornerZero,
    NonidentityCornerZero,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::MapsVIntoH,
        Predicate::NonidentityMapsVIntoH,
        Predicate::NonidentityFixesV,
        Predicate::CornerZero,
        Predicate::NonidentityCornerZero,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Predicate::MapsVIntoH => "maps-v-into-H",
            Predicate::NonidentityMapsVIntoH => "nonidentity-maps-v-into-H",
            Predicate::NonidentityFixesV => "nonidentity-fixes-v",
            Predicate::CornerZero => "corner-zero",
            Predicate::NonidentityCornerZero => "nonidentity-corner-zero",
        }
    }

    /// Whether the identity matrix is excluded as a witness.
    pub fn excludes_identity(self) -> bool {
        matches!(
            self,
            Predicate::NonidentityMapsVIntoH
                | Predicate::NonidentityFixesV
                | Predicate::NonidentityCornerZero
        )
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Predicate {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown predicate {s:?}"))
    }
}

/// A problem instance the search can run on.
pub trait SearchInstance {
    type Scalar: Invertible;

    fn kind(&self) -> &'static str;
    fn generators(&self) -> &[Matrix<Self::Scalar>];
    /// The predicate searched by default; the only one for most kinds.
    fn default_predicate(&self) -> Predicate;
    fn supports(&self, predicate: Predicate) -> bool {
        predicate == self.default_predicate()
    }
    /// Tests the predicate on a group element, ignoring the identity guard.
    fn test(&self, predicate: Predicate, h: &Matrix<Self::Scalar>) -> bool;
}

/// Generator matrices followed by their inverses, in search letter order.
pub fn letters<I: SearchInstance>(inst: &I) -> Result<Vec<Matrix<I::Scalar>>, SearchError> {
    let mut out = Vec::with_capacity(2 * inst.generators().len());
    for g in inst.generators() {
        out.push(g.clone());
        out.push(I::Scalar::invert(g)?);
    }
    Ok(out)
}

/// Full predicate including the nonidentity guard.
pub fn holds<I: SearchInstance>(inst: &I, predicate: Predicate, h: &Matrix<I::Scalar>) -> bool {
    !(predicate.excludes_identity() && h.is_identity()) && inst.test(predicate, h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Found,
    Exhausted,
    Truncated,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Found => "found",
            Outcome::Exhausted => "exhausted",
            Outcome::Truncated => "truncated",
        }
    }
}

impl FromStr for Outcome {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        [Outcome::Found, Outcome::Exhausted, Outcome::Truncated]
            .into_iter()
            .find(|o| o.as_str() == s)
            .ok_or_else(|| format!("unknown outcome {s:?}"))
    }
}

/// Result of a bounded search. When found, `word` and `matrix` witness the
/// predicate; otherwise both are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<S> {
    pub word: Option<GenWord>,
    pub matrix: Option<Matrix<S>>,
    pub elements_visited: u64,
    /// Word length of the witness when found, otherwise the last fully
    /// explored length.
    pub depth_searched: usize,
    pub outcome: Outcome,
}

fn check<I: SearchInstance>(inst: &I, predicate: Predicate) -> Result<(), SearchError> {
    if !inst.supports(predicate) {
        return Err(SearchError::PredicateMismatch {
            predicate,
            kind: inst.kind(),
        });
    }
    if inst.generators().is_empty() {
        return Err(SearchError::NoGenerators);
    }
    Ok(())
}

/// Searches words of length at most `depth` for the lexicographically least
/// shortest element satisfying `predicate`.
pub fn bfs_search<I: SearchInstance>(
    inst: &I,
    predicate: Predicate,
    depth: usize,
    budget: u64,
) -> Result<Certificate<I::Scalar>, SearchError> {
    if depth == 0 {
        return Err(SearchError::ZeroDepth);
    }
    check(inst, predicate)?;
    let letters = letters(inst)?;
    let mut witness = None;
    let stats = explore(&letters, depth, budget, |v| {
        if holds(inst, predicate, v.matrix) {
            witness = Some((v.word(), v.matrix.clone()));
            Control::Stop
        } else {
            Control::Continue
        }
    });
    let outcome = match (&witness, stats.truncated) {
        (Some(_), _) => Outcome::Found,
        (None, true) => Outcome::Truncated,
        (None, false) => Outcome::Exhausted,
    };
    let (word, matrix) = witness.unzip();
    Ok(Certificate {
        word,
        matrix,
        elements_visited: stats.visited,
        depth_searched: stats.depth,
        outcome,
    })
}

/// Product of the generator word, computed from scratch.
pub fn evaluate<I: SearchInstance>(
    inst: &I,
    word: &GenWord,
) -> Result<Matrix<I::Scalar>, SearchError> {
    let gens = inst.generators();
    let index = word.max_generator();
    if index > gens.len() {
        return Err(SearchError::UnknownGenerator {
            index,
            count: gens.len(),
        });
    }
    let n = gens.first().map_or(0, Matrix::rows);
    let mut m = Matrix::identity(n);
    for &l in word.letters() {
        let g = &gens[l.unsigned_abs() as usize - 1];
        let factor = if l > 0 {
            g.clone()
        } else {
            I::Scalar::invert(g)?
        };
        m = m.mul(&factor)?;
    }
    Ok(m)
}

/// Re-derives the witness matrix from the word and re-tests the predicate.
pub fn verify_certificate<I: SearchInstance>(
    inst: &I,
    predicate: Predicate,
    cert: &Certificate<I::Scalar>,
) -> Result<bool, SearchError> {
    check(inst, predicate)?;
    let Some(word) = (cert.outcome == Outcome::Found)
        .then_some(())
        .and(cert.word.as_ref())
    else {
        return Ok(false);
    };
    let m = evaluate(inst, word)?;
    if cert.matrix.as_ref().is_some_and(|claimed| claimed != &m) {
        return Ok(false);
    }
    Ok(holds(inst, predicate, &m))
}
