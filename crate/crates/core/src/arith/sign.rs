use super::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn of_bigint(n: &BigInt) -> Sign {
        if n.is_positive() {
            Sign::Positive
        } else if n.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn of_rational(q: &Rational) -> Sign {
        Sign::of_bigint(q.numer())
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

const START_BITS: u32 = 64;

/// Sign of `sum_i c_i * prod_{d in D_i} sqrt(d)`.
///
/// Callers guarantee that the products of radicands are linearly
/// independent over Q, so the value is zero exactly when every coefficient
/// is. Nonzero values are resolved by dyadic interval enclosures of each
/// square root, doubling the precision until the enclosure excludes zero.
pub(crate) fn sign_of_radical_sum(terms: &[(&Rational, &[u64])]) -> Sign {
    let live: Vec<_> = terms.iter().filter(|(c, _)| !c.is_zero()).collect();
    if live.is_empty() {
        return Sign::Zero;
    }
    if live.len() == 1 {
        return Sign::of_rational(live[0].0);
    }
    let mut bits = START_BITS;
    loop {
        let scale = BigInt::one() << bits;
        // floor(sqrt(d) * 2^bits) < sqrt(d) * 2^bits < floor + 1 for non-square d
        let mut roots: BTreeMap<u64, (Rational, Rational)> = BTreeMap::new();
        let mut lo_sum = Rational::zero();
        let mut hi_sum = Rational::zero();
        for (coef, rads) in &live {
            let mut lo = Rational::one();
            let mut hi = Rational::one();
            for &d in rads.iter() {
                let (rl, rh) = roots
                    .entry(d)
                    .or_insert_with(|| {
                        let floor = (BigInt::from(d) * &scale * &scale).sqrt();
                        let denom = scale.clone();
                        (
                            Rational::new(floor.clone(), denom.clone()),
                            Rational::new(floor + 1, denom),
                        )
                    })
                    .clone();
                lo *= rl;
                hi *= rh;
            }
            if coef.is_positive() {
                lo_sum += &lo * *coef;
                hi_sum += &hi * *coef;
            } else {
                lo_sum += &hi * *coef;
                hi_sum += &lo * *coef;
            }
        }
        if lo_sum.is_positive() {
            return Sign::Positive;
        }
        if hi_sum.is_negative() {
            return Sign::Negative;
        }
        bits *= 2;
    }
}
