//! A free hyperbolic subgroup of `SL_2(Z)` and word evaluation into it.

use crate::arith::{Integer, Matrix};
use crate::free::{letter_at, FreeWord};
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchottkyError {
    #[error("generator {0} is not a 2x2 matrix")]
    Shape(usize),
    #[error("generator {0} has determinant {1}, expected 1")]
    Determinant(usize, String),
    #[error("generator {0} has trace {1}, not hyperbolic")]
    NotHyperbolic(usize, String),
    #[error("commutator trace {0} is not below -2")]
    CommutatorTrace(String),
    #[error("word over rank {0}, expected rank 2")]
    Rank(usize),
}

/// Two matrices in `SL_2(Z)` satisfying `|tr| > 2` for both and
/// `tr(S1 S2 S1^-1 S2^-1) < -2`, which makes them a free basis of a
/// discrete group all of whose nonidentity elements are hyperbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchottkyPair {
    s1: Matrix<Integer>,
    s2: Matrix<Integer>,
    // letter order a, a', b, b'
    letters: [Matrix<Integer>; 4],
}

impl SchottkyPair {
    pub fn new(s1: Matrix<Integer>, s2: Matrix<Integer>) -> Result<Self, SchottkyError> {
        let two = Integer::from(2);
        for (i, s) in [&s1, &s2].into_iter().enumerate() {
            if s.rows() != 2 || s.cols() != 2 {
                return Err(SchottkyError::Shape(i + 1));
            }
            let d = s.det().expect("square");
            if !d.is_one() {
                return Err(SchottkyError::Determinant(i + 1, d.to_string()));
            }
            if s.trace().abs() <= two {
                return Err(SchottkyError::NotHyperbolic(i + 1, s.trace().to_string()));
            }
        }
        let letters = [
            s1.clone(),
            s1.unimodular_inverse().expect("det 1"),
            s2.clone(),
            s2.unimodular_inverse().expect("det 1"),
        ];
        let pair = SchottkyPair { s1, s2, letters };
        let t = pair.commutator_trace();
        if t >= -two {
            return Err(SchottkyError::CommutatorTrace(t.to_string()));
        }
        Ok(pair)
    }

    /// `S1 = [[3,2],[1,1]]`, `S2 = [[1,1],[2,3]]`.
    pub fn canonical() -> Self {
        SchottkyPair::new(
            Matrix::from_i64(2, &[3, 2, 1, 1]),
            Matrix::from_i64(2, &[1, 1, 2, 3]),
        )
        .expect("canonical pair satisfies the criterion")
    }

    pub fn s1(&self) -> &Matrix<Integer> {
        &self.s1
    }
    pub fn s2(&self) -> &Matrix<Integer> {
        &self.s2
    }

    /// Matrix of a single signed letter (`±1` for `a`, `±2` for `b`).
    pub fn letter(&self, l: i32) -> &Matrix<Integer> {
        &self.letters[crate::free::letter_rank(l)]
    }

    pub fn commutator(&self) -> Matrix<Integer> {
        [
            &self.s1,
            &self.letters[2],
            &self.letters[1],
            &self.letters[3],
        ]
        .into_iter()
        .fold(Matrix::identity(2), |acc, m| acc.mul_unchecked(m))
    }

    pub fn commutator_trace(&self) -> Integer {
        self.commutator().trace()
    }

    /// Evaluates a word over `{a, b}` by exact multiplication.
    pub fn eval_word(&self, w: &FreeWord) -> Result<Matrix<Integer>, SchottkyError> {
        if w.rank() != 2 {
            return Err(SchottkyError::Rank(w.rank()));
        }
        Ok(w.letters().iter().fold(Matrix::identity(2), |acc, &l| {
            acc.mul_unchecked(self.letter(l))
        }))
    }

    /// Visits every reduced word of length at most `depth` with its
    /// matrix, in shortlex order, extending each word's matrix by one
    /// letter instead of re-evaluating.
    pub fn for_each_word<F: FnMut(&FreeWord, &Matrix<Integer>)>(&self, depth: usize, mut f: F) {
        let mut layer = vec![(FreeWord::identity(2), Matrix::identity(2))];
        f(&layer[0].0, &layer[0].1);
        for _ in 0..depth {
            let mut next = Vec::with_capacity(layer.len() * 3);
            for (w, m) in &layer {
                for r in 0..4 {
                    let l = letter_at(r);
                    if w.letters().last() == Some(&-l) {
                        continue;
                    }
                    let w2 = w
                        .mul(&FreeWord::new(2, &[l]).expect("rank 2"))
                        .expect("rank 2");
                    let m2 = m.mul_unchecked(self.letter(l));
                    f(&w2, &m2);
                    next.push((w2, m2));
                }
            }
            layer = next;
        }
    }
}

/// Result of scanning all nonidentity reduced words up to some length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperbolicityReport {
    /// Words whose matrix has `|tr| <= 2` or determinant other than 1.
    pub violations: Vec<String>,
    #[serde(serialize_with = "integer_as_number")]
    pub min_abs_trace: Option<Integer>,
    pub words_checked: u64,
}

fn integer_as_number<S: Serializer>(x: &Option<Integer>, s: S) -> Result<S::Ok, S::Error> {
    match x.as_ref().map(|n| n.to_u64()) {
        None => s.serialize_none(),
        Some(Some(n)) => s.serialize_u64(n),
        Some(None) => s.serialize_str(&x.as_ref().expect("some").to_string()),
    }
}

pub fn hyperbolicity_scan(pair: &SchottkyPair, depth: usize) -> HyperbolicityReport {
    let two = Integer::from(2);
    let mut report = HyperbolicityReport {
        violations: Vec::new(),
        min_abs_trace: None,
        words_checked: 0,
    };
    pair.for_each_word(depth, |w, m| {
        if w.is_identity() {
            return;
        }
        report.words_checked += 1;
        let t = m.trace().abs();
        if t <= two || !m.det().expect("square").is_one() {
            report.violations.push(w.to_string());
        }
        if report.min_abs_trace.as_ref().map_or(true, |min| &t < min) {
            report.min_abs_trace = Some(t);
        }
    });
    report
}

/// Outcome of checking that distinct reduced words give distinct matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Injectivity {
    Injective { words: u64 },
    Collision(FreeWord, FreeWord),
}

/// Dedups by the exact entries of each matrix.
pub fn injectivity_scan(pair: &SchottkyPair, depth: usize) -> Injectivity {
    let mut seen: HashMap<Matrix<Integer>, FreeWord> = HashMap::new();
    let mut collision = None;
    let mut words = 0;
    pair.for_each_word(depth, |w, m| {
        words += 1;
        if collision.is_none() {
            if let Some(prev) = seen.insert(m.clone(), w.clone()) {
                collision = Some((prev, w.clone()));
            }
        }
    });
    match collision {
        Some((u, v)) => Injectivity::Collision(u, v),
        None => Injectivity::Injective { words },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(2, s).unwrap()
    }

    #[test]
    fn canonical_pair_and_commutator() {
        let p = SchottkyPair::canonical();
        assert_eq!(p.s1(), &Matrix::from_i64(2, &[3, 2, 1, 1]));
        assert_eq!(p.s2(), &Matrix::from_i64(2, &[1, 1, 2, 3]));
        assert_eq!(p.s1().trace(), Integer::from(4));
        assert_eq!(p.commutator_trace(), Integer::from(-25));
        assert_eq!(p.commutator(), Matrix::from_i64(2, &[-32, 15, -15, 7]));
    }

    #[test]
    fn word_evaluation() {
        let p = SchottkyPair::canonical();
        assert_eq!(
            p.eval_word(&w("ab")).unwrap(),
            Matrix::from_i64(2, &[7, 9, 3, 4])
        );
        assert_eq!(
            p.eval_word(&w("a b a' b'")).unwrap(),
            Matrix::from_i64(2, &[-32, 15, -15, 7])
        );
        assert!(p.eval_word(&w("1")).unwrap().is_identity());
        assert!(p.eval_word(&FreeWord::identity(3)).is_err());
    }

    #[test]
    fn rejects_bad_pairs() {
        let s1 = Matrix::from_i64(2, &[3, 2, 1, 1]);
        let s1_inv = s1.unimodular_inverse().unwrap();
        assert!(matches!(
            SchottkyPair::new(s1.clone(), s1_inv),
            Err(SchottkyError::CommutatorTrace(_))
        ));
        let parabolic = Matrix::from_i64(2, &[1, 1, 0, 1]);
        assert!(matches!(
            SchottkyPair::new(s1.clone(), parabolic),
            Err(SchottkyError::NotHyperbolic(2, _))
        ));
        let bad_det = Matrix::from_i64(2, &[2, 0, 0, 1]);
        assert!(matches!(
            SchottkyPair::new(bad_det, s1),
            Err(SchottkyError::Determinant(1, _))
        ));
    }

    #[test]
    fn short_scans() {
        let p = SchottkyPair::canonical();
        let r = hyperbolicity_scan(&p, 1);
        assert!(r.violations.is_empty());
        assert_eq!(r.min_abs_trace, Some(Integer::from(4)));
        assert_eq!(r.words_checked, 4);
        assert_eq!(
            injectivity_scan(&p, 3),
            Injectivity::Injective { words: 53 }
        );
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"violations":[],"min_abs_trace":4,"words_checked":4}"#
        );
    }
}
