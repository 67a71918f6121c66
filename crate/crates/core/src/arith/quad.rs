use super::radicand::square_free_part;
use super::rational::write_bigint;
use super::sign::sign_of_radical_sum;
use super::text::{format_term, parse_radical_sum};
use super::{ArithError, Field, Integer, Rational, Ring, Sign};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// An element `a + b*sqrt(d)` of a real quadratic field.
///
/// `d` is square-free and greater than one whenever `b != 0`. Rational
/// values (`b == 0`) carry `d == 1` and combine with any field, which is how
/// Q promotes into Q(sqrt D).
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadExt {
    /// Builds `a + b*sqrt(n)` for any positive integer `n`, normalizing the
    /// radicand to its square-free part.
    pub fn new(a: Rational, b: Rational, n: u64) -> Result<Self, ArithError> {
        let (s, d) = square_free_part(&BigInt::from(n))?;
        let b = b * Rational::from_integer(s);
        Ok(Self::from_parts(a, b, d))
    }

    fn from_parts(a: Rational, b: Rational, d: u64) -> Self {
        if d == 1 {
            QuadExt {
                a: a + b,
                b: Rational::zero(),
                d: 1,
            }
        } else if b.is_zero() {
            QuadExt { a, b, d: 1 }
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    /// Exact `sqrt(n)` for a non-negative integer `n`.
    pub fn sqrt(n: &Integer) -> Result<Self, ArithError> {
        if n.is_zero() {
            return Ok(Self::rational(Rational::zero()));
        }
        let (s, d) = square_free_part(n)?;
        Ok(Self::from_parts(
            Rational::zero(),
            Rational::from_integer(s),
            d,
        ))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    /// Square-free radicand, or 1 for rational values.
    pub fn radicand(&self) -> u64 {
        self.d
    }
    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    fn join(&self, other: &Self) -> Result<u64, ArithError> {
        match (self.d, other.d) {
            (1, d) | (d, 1) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(ArithError::IncompatibleRadicands(vec![x, y])),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        let d = self.join(rhs)?;
        Ok(Self::from_parts(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        let d = self.join(rhs)?;
        let dd = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::from_parts(a, b, d))
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Field norm `a^2 - d b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.d == other.d
    }
}
impl Eq for QuadExt {}

impl Hash for QuadExt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.d.hash(state);
    }
}

impl From<Rational> for QuadExt {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl From<Integer> for QuadExt {
    fn from(n: Integer) -> Self {
        Self::rational(Rational::from_integer(n))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}", self.a, format_term(&self.b, &[self.d]))
        }
    }
}

impl FromStr for QuadExt {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self, ArithError> {
        let mut acc = QuadExt::rational(Rational::zero());
        for (coef, roots) in parse_radical_sum(s)? {
            let mut term = QuadExt::rational(coef);
            for n in roots {
                term = term.checked_mul(&QuadExt::sqrt(&n)?)?;
            }
            acc = acc
                .checked_add(&term)
                .map_err(|_| ArithError::parse(s, "more than one radicand"))?;
        }
        Ok(acc)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs).expect("incompatible quadratic fields")
            }
        }
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}

impl QuadExt {
    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.checked_add(&rhs.neg_ref())
    }
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        self.neg_ref()
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Ring for QuadExt {
    const HAS_RADICANDS: bool = true;

    fn from_integer(n: Integer) -> Self {
        n.into()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.div_ref(rhs).expect("division by zero")
    }
    fn real_sign(&self) -> Sign {
        let d = [self.d];
        sign_of_radical_sum(&[(&self.a, &[]), (&self.b, &d)])
    }
    fn radicands(&self) -> Vec<u64> {
        if self.is_rational() {
            Vec::new()
        } else {
            vec![self.d]
        }
    }
    fn admits(radicands: &[u64]) -> bool {
        radicands.windows(2).all(|w| w[0] == w[1])
    }
    fn write_key(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.d.to_le_bytes());
        write_bigint(self.a.numer(), out);
        write_bigint(self.a.denom(), out);
        write_bigint(self.b.numer(), out);
        write_bigint(self.b.denom(), out);
    }
    fn parse_scalar(text: &str) -> Result<Self, ArithError> {
        text.parse()
    }
}

impl Field for QuadExt {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadExt {
            a: &self.a / &n,
            b: -&self.b / &n,
            d: self.d,
        })
    }
}

/// Convenience constructor used widely in tests: `a + b*sqrt(d)` from
/// rational strings.
#[cfg(test)]
pub(crate) fn quad(a: &str, b: &str, d: u64) -> QuadExt {
    QuadExt::new(
        super::rational::parse_rational(a).expect("rational"),
        super::rational::parse_rational(b).expect("rational"),
        d,
    )
    .expect("valid radicand")
}
