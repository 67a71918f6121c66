//! Builders for the hyperplane, stabilizer and corner problem instances.

mod corner;
mod external;
mod internal;
mod membership;
mod stabilizer;

pub use corner::{external_to_corner, internal_to_corner, CornerInstance};
pub use external::{build_ulcp, build_ulcp_for, ExternalInstance};
pub use internal::{build_urcp, orientation_witness, InternalBlock, InternalInstance};
pub use membership::{
    decide_membership_batch, decide_membership_bounded, documented_depth, Membership,
};
pub use stabilizer::{build_stabilizer, StabilizerInstance};

use crate::arith::{ArithError, Integer, Matrix};
use crate::cone::{phi, ConeError};
use crate::free::{TupleWord, WordError};
use crate::presentation::PresentationError;
use crate::schottky::{SchottkyError, SchottkyPair};
use crate::search::SearchError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("the identity query is answered without building an instance")]
    IdentityQuery,
    #[error("component {0} of the query is the identity")]
    IdentityComponent(usize),
    #[error("expected a tuple of arity {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("expected words over F_2, got rank {0}")]
    Rank(usize),
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("no invertible basis completion exists")]
    Completion,
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Schottky(#[from] SchottkyError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Where an instance came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub presentation: Option<String>,
    pub query: String,
    pub pair: [Matrix<Integer>; 2],
}

impl Provenance {
    pub(crate) fn new(
        presentation: Option<&str>,
        query: impl ToString,
        pair: &SchottkyPair,
    ) -> Self {
        Provenance {
            presentation: presentation.map(str::to_string),
            query: query.to_string(),
            pair: [pair.s1().clone(), pair.s2().clone()],
        }
    }
}

fn check_tuple(t: &TupleWord, arity: usize) -> Result<(), ReductionError> {
    if t.arity() != arity {
        return Err(ReductionError::Arity {
            expected: arity,
            got: t.arity(),
        });
    }
    if t.rank() != 2 {
        return Err(ReductionError::Rank(t.rank()));
    }
    Ok(())
}

/// `diag(phi(eval t1), phi(eval t2), ...)`.
pub fn tuple_matrix(pair: &SchottkyPair, t: &TupleWord) -> Result<Matrix<Integer>, ReductionError> {
    let blocks = t
        .components()
        .iter()
        .map(|c| Ok(phi(&pair.eval_word(c)?)?))
        .collect::<Result<Vec<_>, ReductionError>>()?;
    Ok(Matrix::block_diag(&blocks))
}

/// Whether `m` is block diagonal with square blocks of the given size.
pub(crate) fn is_block_diagonal<S: crate::arith::Ring>(m: &Matrix<S>, size: usize) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i / size == j / size || m[(i, j)].is_zero()))
}

fn check_generators(gens: &[Matrix<Integer>], n: usize) -> Result<(), ReductionError> {
    if gens.is_empty() {
        return Err(ReductionError::Invalid("no generators".into()));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.rows() != n || g.cols() != n {
            return Err(ReductionError::Invalid(format!(
                "generator {} is not {n}x{n}",
                i + 1
            )));
        }
        if g.unimodular_inverse().is_err() {
            return Err(ReductionError::Invalid(format!(
                "generator {} is not invertible over Z",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Any of the instance kinds the builders and the corner conversion emit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemInstance {
    External(ExternalInstance),
    Internal(InternalInstance),
    Stabilizer(StabilizerInstance),
    /// Converted external instance, corner (1,1).
    RationalCorner(CornerInstance<crate::arith::Rational>),
    /// Converted internal instance, corner (1,n).
    CompositumCorner(CornerInstance<crate::arith::MultiQuad>),
}

impl ProblemInstance {
    pub fn kind(&self) -> &'static str {
        use crate::search::SearchInstance;
        match self {
            ProblemInstance::External(i) => i.kind(),
            ProblemInstance::Internal(i) => i.kind(),
            ProblemInstance::Stabilizer(i) => i.kind(),
            ProblemInstance::RationalCorner(i) => i.kind(),
            ProblemInstance::CompositumCorner(i) => i.kind(),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            ProblemInstance::External(i) => i.dimension(),
            ProblemInstance::Internal(i) => i.dimension(),
            ProblemInstance::Stabilizer(i) => i.vector().len(),
            ProblemInstance::RationalCorner(i) => i.dimension(),
            ProblemInstance::CompositumCorner(i) => i.dimension(),
        }
    }

    pub fn provenance(&self) -> &Provenance {
        match self {
            ProblemInstance::External(i) => i.provenance(),
            ProblemInstance::Internal(i) => i.provenance(),
            ProblemInstance::Stabilizer(i) => i.provenance(),
            ProblemInstance::RationalCorner(i) => i.provenance(),
            ProblemInstance::CompositumCorner(i) => i.provenance(),
        }
    }

    /// Converts a hyperplane instance to its corner form.
    pub fn to_corner(&self) -> Result<ProblemInstance, ReductionError> {
        match self {
            ProblemInstance::External(i) => {
                Ok(ProblemInstance::RationalCorner(external_to_corner(i)?))
            }
            ProblemInstance::Internal(i) => {
                Ok(ProblemInstance::CompositumCorner(internal_to_corner(i)?))
            }
            _ => Err(ReductionError::Invalid(format!(
                "{} instances have no corner form",
                self.kind()
            ))),
        }
    }
}
