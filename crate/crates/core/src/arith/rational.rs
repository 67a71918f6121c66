use super::{ArithError, Field, Ring, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Integer = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

pub(crate) fn write_bigint(n: &BigInt, out: &mut Vec<u8>) {
    let bytes = n.to_signed_bytes_le();
    out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
    out.extend_from_slice(&bytes);
}

pub(crate) fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(ArithError::parse(text, "empty"));
    }
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| ArithError::parse(text, "bad numerator"))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| ArithError::parse(text, "bad denominator"))?;
            if q.is_zero() {
                return Err(ArithError::parse(text, "zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
        None => t
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| ArithError::parse(text, "not a rational")),
    }
}

impl Ring for Integer {
    fn from_integer(n: Integer) -> Self {
        n
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
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % rhs)));
        self / rhs
    }
    fn real_sign(&self) -> Sign {
        Sign::of_bigint(self)
    }
    fn write_key(&self, out: &mut Vec<u8>) {
        write_bigint(self, out);
    }
    fn parse_scalar(text: &str) -> Result<Self, ArithError> {
        let q = parse_rational(text)?;
        if q.is_integer() {
            Ok(q.to_integer())
        } else {
            Err(ArithError::parse(text, "expected an integer"))
        }
    }
}

impl Ring for Rational {
    fn from_integer(n: Integer) -> Self {
        BigRational::from_integer(n)
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
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn real_sign(&self) -> Sign {
        Sign::of_rational(self)
    }
    fn write_key(&self, out: &mut Vec<u8>) {
        write_bigint(self.numer(), out);
        write_bigint(self.denom(), out);
    }
    fn parse_scalar(text: &str) -> Result<Self, ArithError> {
        parse_rational(text)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
