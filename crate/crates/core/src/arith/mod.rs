//! Exact scalars, vectors and matrices.
//!
//! Three scalar kinds are provided: [`Rational`] (and [`Integer`] as a ring),
//! [`QuadExt`] for a single real quadratic field `Q(sqrt D)`, and
//! [`MultiQuad`] for composita `Q(sqrt D1, ..., sqrt Dk)`. All of them
//! implement [`Ring`]; the division-capable ones implement [`Field`].
//! Nothing in this module stores a floating-point value.

mod matrix;
mod multiquad;
mod quad;
mod radicand;
mod rational;
mod sign;
mod text;

pub use matrix::{det, mat_inv, mat_mul, Matrix};
pub use multiquad::{MultiQuad, MAX_RADICANDS};
pub use quad::QuadExt;
pub use radicand::{square_free_part, RadicandError};
pub use rational::{Integer, Rational};
pub use sign::Sign;

use num_traits::{One, Zero};
use std::fmt;
use std::hash::Hash;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },
    #[error("incompatible radicand sets {0:?}")]
    IncompatibleRadicands(Vec<u64>),
    #[error("matrix is singular")]
    Singular,
    #[error("integer matrix is not invertible over the integers")]
    NotUnimodular,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error(transparent)]
    Radicand(#[from] RadicandError),
}

impl ArithError {
    pub(crate) fn parse(text: &str, reason: impl Into<String>) -> Self {
        ArithError::Parse {
            text: text.to_string(),
            reason: reason.into(),
        }
    }
}

/// A commutative ring of exactly represented real numbers.
///
/// Arithmetic goes through `*_ref` methods so generic code never has to
/// clone big integers just to combine them.
pub trait Ring:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Zero + One + Send + Sync + 'static
{
    /// True when values may carry square roots; lets matrix code skip the
    /// radicand bookkeeping for plain integers and rationals.
    const HAS_RADICANDS: bool = false;

    fn from_integer(n: Integer) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Quotient of `self` by `rhs` where the division is known to be exact.
    fn div_exact(&self, rhs: &Self) -> Self;
    /// Sign of the real value.
    fn real_sign(&self) -> Sign;
    /// Square-free radicands this value actually involves.
    fn radicands(&self) -> Vec<u64> {
        Vec::new()
    }
    /// Whether a matrix whose entries jointly involve `radicands` can be
    /// represented in this scalar kind.
    fn admits(radicands: &[u64]) -> bool {
        radicands.is_empty()
    }
    /// Injective byte encoding, used as a deduplication key.
    fn write_key(&self, out: &mut Vec<u8>);
    fn parse_scalar(text: &str) -> Result<Self, ArithError>;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(Integer::from(n))
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }
}

/// Sign of an exact scalar as -1, 0 or +1.
pub fn exact_sign<S: Ring>(x: &S) -> i8 {
    x.real_sign().as_i8()
}

/// Dot product of two equally long slices.
pub fn dot<S: Ring>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc.add_ref(&x.mul_ref(y)))
}

/// Converts a vector entrywise into a wider scalar kind.
pub fn promote_vec<S: Clone, T: From<S>>(v: &[S]) -> Vec<T> {
    v.iter().cloned().map(T::from).collect()
}

/// Scalar kinds whose invertible matrices can be inverted within the kind:
/// integers (unimodular matrices only) and the fields.
pub trait Invertible: Ring {
    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>, ArithError>;
}

impl Invertible for Integer {
    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>, ArithError> {
        m.unimodular_inverse()
    }
}

macro_rules! field_invertible {
    ($($t:ty),*) => {$(
        impl Invertible for $t {
            fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>, ArithError> {
                m.inverse()
            }
        }
    )*};
}

field_invertible!(Rational, QuadExt, MultiQuad);
