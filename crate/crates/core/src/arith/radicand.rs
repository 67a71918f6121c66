use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadicandError {
    #[error("radicand {0} is not positive")]
    NotPositive(String),
    #[error("radicand {0} does not fit in 64 bits")]
    TooLarge(String),
}

/// Prime factorization by trial division, primes in ascending order with
/// multiplicity.
pub(crate) fn factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Primes dividing a square-free `d` an odd number of times, i.e. its
/// vector over GF(2) indexed by primes.
pub(crate) fn prime_set(d: u64) -> Vec<u64> {
    let mut set: Vec<u64> = Vec::new();
    for p in factor(d) {
        if set.last() == Some(&p) {
            set.pop();
        } else {
            set.push(p);
        }
    }
    set
}

/// Writes a positive integer `n` as `s^2 * d` with `d` square-free and
/// returns `(s, d)`.
pub fn square_free_part(n: &BigInt) -> Result<(BigInt, u64), RadicandError> {
    if !n.is_positive() {
        return Err(RadicandError::NotPositive(n.to_string()));
    }
    let v = n
        .to_u64()
        .ok_or_else(|| RadicandError::TooLarge(n.to_string()))?;
    let mut s = 1u64;
    let mut d = 1u64;
    let primes = factor(v);
    let mut i = 0;
    while i < primes.len() {
        let p = primes[i];
        let mut e = 0;
        while i < primes.len() && primes[i] == p {
            e += 1;
            i += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
    }
    Ok((BigInt::from(s), d))
}

/// Symmetric difference of two sorted prime sets.
pub(crate) fn xor_sets(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
