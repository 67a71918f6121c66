use super::radicand::{factor, prime_set, xor_sets};
use super::rational::write_bigint;
use super::sign::sign_of_radical_sum;
use super::text::{format_term, parse_radical_sum};
use super::{ArithError, Field, Integer, QuadExt, Rational, Ring, Sign};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Largest number of independent radicands a matrix may combine.
pub const MAX_RADICANDS: usize = 3;

/// An element of a multi-quadratic field `Q(sqrt D1, ..., sqrt Dk)`.
///
/// The value is `sum_S coords[S] * prod_{i in S} sqrt(D_i)` with `S` a
/// bitmask over `radicands`. Every value is stored over the smallest such
/// field containing it, with the radicands taken as the reduced echelon
/// basis (over GF(2), primes ordered ascending) of that field's square
/// classes. The representation is therefore unique, derived equality is
/// value equality, and a value is zero iff all coordinates are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiQuad {
    radicands: Vec<u64>,
    coords: Vec<Rational>,
}

/// Basis of square classes: `rows[i]` is the prime set of `radicands[i]`,
/// rows are in reduced echelon form keyed by their smallest prime.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Tower {
    radicands: Vec<u64>,
    rows: Vec<Vec<u64>>,
}

impl Tower {
    fn of(radicands: &[u64]) -> Self {
        Tower {
            radicands: radicands.to_vec(),
            rows: radicands.iter().map(|&d| prime_set(d)).collect(),
        }
    }

    /// Reduced echelon basis of the span of `vectors`.
    fn spanned_by(vectors: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for mut v in vectors {
            for r in &rows {
                if v.binary_search(&r[0]).is_ok() {
                    v = xor_sets(&v, r);
                }
            }
            if v.is_empty() {
                continue;
            }
            let pivot = v[0];
            for r in rows.iter_mut() {
                if r.binary_search(&pivot).is_ok() {
                    *r = xor_sets(r, &v);
                }
            }
            rows.push(v);
        }
        let mut pairs: Vec<(u64, Vec<u64>)> = rows
            .into_iter()
            .map(|r| (r.iter().product::<u64>(), r))
            .collect();
        pairs.sort();
        Tower {
            radicands: pairs.iter().map(|p| p.0).collect(),
            rows: pairs.into_iter().map(|p| p.1).collect(),
        }
    }

    fn join(&self, other: &Tower) -> Tower {
        if self.radicands == other.radicands {
            return self.clone();
        }
        Tower::spanned_by(self.rows.iter().chain(other.rows.iter()).cloned())
    }

    fn k(&self) -> usize {
        self.radicands.len()
    }

    /// Adds `coef * sqrt(prod primes)` into `coords`, where `primes` is a
    /// multiset (sorted) of primes whose odd part lies in this tower.
    fn accumulate(&self, coords: &mut [Rational], coef: Rational, primes: &[u64]) {
        // sqrt(prod primes) = s * sqrt(odd part)
        let mut s = BigInt::one();
        let mut odd = Vec::new();
        let mut i = 0;
        while i < primes.len() {
            let p = primes[i];
            let mut e = 0u32;
            while i < primes.len() && primes[i] == p {
                e += 1;
                i += 1;
            }
            s *= BigInt::from(p).pow(e / 2);
            if e % 2 == 1 {
                odd.push(p);
            }
        }
        let mut mask = 0usize;
        let mut acc: Vec<u64> = Vec::new();
        let mut multiset: Vec<u64> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if odd.binary_search(&row[0]).is_ok() {
                mask |= 1 << i;
                acc = xor_sets(&acc, row);
                multiset.extend_from_slice(row);
            }
        }
        assert_eq!(acc, odd, "square class outside the tower");
        // prod_{i in mask} sqrt(D_i) = t * sqrt(odd part)
        multiset.sort_unstable();
        let mut t = BigInt::one();
        let mut i = 0;
        while i < multiset.len() {
            let p = multiset[i];
            let mut e = 0u32;
            while i < multiset.len() && multiset[i] == p {
                e += 1;
                i += 1;
            }
            t *= BigInt::from(p).pow(e / 2);
        }
        let scale = Rational::new(s, t);
        coords[mask] += coef * scale;
    }

    fn mask_primes(&self, mask: usize) -> Vec<u64> {
        let mut primes: Vec<u64> = (0..self.k())
            .filter(|i| mask >> i & 1 == 1)
            .flat_map(|i| self.rows[i].iter().copied())
            .collect();
        primes.sort_unstable();
        primes
    }
}

fn rank_of_masks(masks: impl Iterator<Item = usize>) -> usize {
    let mut basis: Vec<usize> = Vec::new();
    for mut m in masks {
        for &b in &basis {
            m = m.min(m ^ b);
        }
        if m != 0 {
            basis.push(m);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

impl MultiQuad {
    fn from_tower(tower: &Tower, coords: Vec<Rational>) -> Self {
        MultiQuad {
            radicands: tower.radicands.clone(),
            coords,
        }
        .normalized()
    }

    fn tower(&self) -> Tower {
        Tower::of(&self.radicands)
    }

    /// Builds a value from `(coefficient, radicands)` terms, each radicand
    /// square-free and greater than one.
    pub fn from_terms(terms: &[(Rational, Vec<u64>)]) -> Self {
        let tower = Tower::spanned_by(terms.iter().map(|(_, rads)| {
            rads.iter()
                .fold(Vec::new(), |acc, &d| xor_sets(&acc, &prime_set(d)))
        }));
        let mut coords = vec![Rational::zero(); 1 << tower.k()];
        for (c, rads) in terms {
            let mut primes: Vec<u64> = rads.iter().flat_map(|&d| factor(d)).collect();
            primes.sort_unstable();
            tower.accumulate(&mut coords, c.clone(), &primes);
        }
        Self::from_tower(&tower, coords)
    }

    pub fn rational(q: Rational) -> Self {
        MultiQuad {
            radicands: Vec::new(),
            coords: vec![q],
        }
    }

    pub fn radicand_basis(&self) -> &[u64] {
        &self.radicands
    }

    /// Coordinate of the basis element `prod_{i in mask} sqrt(D_i)`.
    pub fn coord(&self, mask: usize) -> &Rational {
        &self.coords[mask]
    }

    pub fn is_rational(&self) -> bool {
        self.radicands.is_empty()
    }

    /// Restricts the representation to the smallest subfield containing the
    /// value.
    fn normalized(self) -> Self {
        let k = self.radicands.len();
        if k == 0 {
            return self;
        }
        let support = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, _)| m);
        if rank_of_masks(support) == k {
            return self;
        }
        let old = self.tower();
        let target = Tower::spanned_by(
            self.coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, _)| {
                    (0..k)
                        .filter(|i| m >> i & 1 == 1)
                        .fold(Vec::new(), |acc, i| xor_sets(&acc, &old.rows[i]))
                }),
        );
        let mut coords = vec![Rational::zero(); 1 << target.k()];
        for (m, c) in self.coords.into_iter().enumerate() {
            if !c.is_zero() {
                target.accumulate(&mut coords, c, &old.mask_primes(m));
            }
        }
        MultiQuad {
            radicands: target.radicands,
            coords,
        }
    }

    fn promote_to(&self, target: &Tower) -> Vec<Rational> {
        if self.radicands == target.radicands {
            return self.coords.clone();
        }
        let old = self.tower();
        let mut coords = vec![Rational::zero(); 1 << target.k()];
        for (m, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                target.accumulate(&mut coords, c.clone(), &old.mask_primes(m));
            }
        }
        coords
    }

    fn combine(&self, rhs: &Self) -> (Tower, Vec<Rational>, Vec<Rational>) {
        let tower = self.tower().join(&rhs.tower());
        let a = self.promote_to(&tower);
        let b = rhs.promote_to(&tower);
        (tower, a, b)
    }

    /// Applies the automorphism `sqrt(D_i) -> -sqrt(D_i)`.
    fn flip(&self, i: usize) -> Self {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(m, c)| if m >> i & 1 == 1 { -c } else { c.clone() })
            .collect();
        MultiQuad {
            radicands: self.radicands.clone(),
            coords,
        }
    }
}

impl From<Rational> for MultiQuad {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl From<Integer> for MultiQuad {
    fn from(n: Integer) -> Self {
        Self::rational(Rational::from_integer(n))
    }
}

impl From<QuadExt> for MultiQuad {
    fn from(x: QuadExt) -> Self {
        if x.is_rational() {
            Self::rational(x.a().clone())
        } else {
            MultiQuad {
                radicands: vec![x.radicand()],
                coords: vec![x.a().clone(), x.b().clone()],
            }
        }
    }
}

impl<'a> Add<&'a MultiQuad> for &'a MultiQuad {
    type Output = MultiQuad;
    fn add(self, rhs: &'a MultiQuad) -> MultiQuad {
        if self.radicands == rhs.radicands {
            let coords = self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect();
            return MultiQuad {
                radicands: self.radicands.clone(),
                coords,
            }
            .normalized();
        }
        let (tower, a, b) = self.combine(rhs);
        let coords = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        MultiQuad::from_tower(&tower, coords)
    }
}

impl<'a> Sub<&'a MultiQuad> for &'a MultiQuad {
    type Output = MultiQuad;
    fn sub(self, rhs: &'a MultiQuad) -> MultiQuad {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a MultiQuad> for &'a MultiQuad {
    type Output = MultiQuad;
    fn mul(self, rhs: &'a MultiQuad) -> MultiQuad {
        if self.is_rational() {
            let c = &self.coords[0];
            let coords = rhs.coords.iter().map(|x| x * c).collect();
            return MultiQuad {
                radicands: rhs.radicands.clone(),
                coords,
            }
            .normalized();
        }
        if rhs.is_rational() {
            return rhs * self;
        }
        let (tower, a, b) = self.combine(rhs);
        let k = tower.k();
        let mut coords = vec![Rational::zero(); 1 << k];
        for (s, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (t, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let shared: u64 = (0..k)
                    .filter(|i| (s & t) >> i & 1 == 1)
                    .map(|i| tower.radicands[i])
                    .product();
                coords[s ^ t] += x * y * Rational::from_integer(BigInt::from(shared));
            }
        }
        MultiQuad::from_tower(&tower, coords)
    }
}

impl Neg for &MultiQuad {
    type Output = MultiQuad;
    fn neg(self) -> MultiQuad {
        MultiQuad {
            radicands: self.radicands.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for MultiQuad {
    type Output = MultiQuad;
    fn add(self, rhs: MultiQuad) -> MultiQuad {
        &self + &rhs
    }
}
impl Sub for MultiQuad {
    type Output = MultiQuad;
    fn sub(self, rhs: MultiQuad) -> MultiQuad {
        &self - &rhs
    }
}
impl Mul for MultiQuad {
    type Output = MultiQuad;
    fn mul(self, rhs: MultiQuad) -> MultiQuad {
        &self * &rhs
    }
}
impl Neg for MultiQuad {
    type Output = MultiQuad;
    fn neg(self) -> MultiQuad {
        -&self
    }
}

impl fmt::Display for MultiQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| {
                let rads: Vec<u64> = (0..self.radicands.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| self.radicands[i])
                    .collect();
                if rads.is_empty() {
                    c.to_string()
                } else {
                    format_term(c, &rads)
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl FromStr for MultiQuad {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self, ArithError> {
        let mut terms = Vec::new();
        for (coef, roots) in parse_radical_sum(s)? {
            let mut rads = Vec::new();
            let mut c = coef;
            for n in roots {
                let (sq, d) = super::square_free_part(&n)?;
                c *= Rational::from_integer(sq);
                if d > 1 {
                    rads.push(d);
                }
            }
            terms.push((c, rads));
        }
        Ok(MultiQuad::from_terms(&terms))
    }
}

impl Zero for MultiQuad {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl One for MultiQuad {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Ring for MultiQuad {
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
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.div_ref(rhs).expect("division by zero")
    }
    fn real_sign(&self) -> Sign {
        let rads: Vec<Vec<u64>> = (0..self.coords.len())
            .map(|m| {
                (0..self.radicands.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| self.radicands[i])
                    .collect()
            })
            .collect();
        let terms: Vec<(&Rational, &[u64])> = self
            .coords
            .iter()
            .zip(&rads)
            .map(|(c, r)| (c, r.as_slice()))
            .collect();
        sign_of_radical_sum(&terms)
    }
    fn radicands(&self) -> Vec<u64> {
        self.radicands.clone()
    }
    fn admits(radicands: &[u64]) -> bool {
        Tower::spanned_by(radicands.iter().map(|&d| prime_set(d))).k() <= MAX_RADICANDS
    }
    fn write_key(&self, out: &mut Vec<u8>) {
        out.push(self.radicands.len() as u8);
        for d in &self.radicands {
            out.extend_from_slice(&d.to_le_bytes());
        }
        for c in &self.coords {
            write_bigint(c.numer(), out);
            write_bigint(c.denom(), out);
        }
    }
    fn parse_scalar(text: &str) -> Result<Self, ArithError> {
        text.parse()
    }
}

impl Field for MultiQuad {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::rational(self.coords[0].recip()));
        }
        // x^-1 = s(x) * (x s(x))^-1 where s flips the last radicand; x s(x)
        // lies in a strictly smaller field.
        let conj = self.flip(self.radicands.len() - 1);
        let prod = self * &conj;
        debug_assert!(prod.radicands.len() < self.radicands.len());
        prod.inv().map(|p| &conj * &p)
    }
}
