use super::{build_ulcp, ExternalInstance, ReductionError};
use crate::arith::{dot, Integer, Matrix};
use crate::free::{FreeWord, TupleWord};
use crate::presentation::Presentation;
use crate::schottky::SchottkyPair;
use crate::search::{bfs_search, explore, letters, Certificate, Control, Outcome, Predicate};
use num_traits::Zero;

/// Answer of a bounded membership query. Exhaustion never means
/// non-membership, only that no certificate exists up to the depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// The identity tuple, answered without a search.
    Trivial,
    Member(Certificate<Integer>),
    NoCertificateAtDepth(Certificate<Integer>),
    Truncated(Certificate<Integer>),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Trivial | Membership::Member(_))
    }

    pub fn certificate(&self) -> Option<&Certificate<Integer>> {
        match self {
            Membership::Trivial => None,
            Membership::Member(c)
            | Membership::NoCertificateAtDepth(c)
            | Membership::Truncated(c) => Some(c),
        }
    }

    fn from_certificate(c: Certificate<Integer>) -> Self {
        match c.outcome {
            Outcome::Found => Membership::Member(c),
            Outcome::Exhausted => Membership::NoCertificateAtDepth(c),
            Outcome::Truncated => Membership::Truncated(c),
        }
    }
}

/// Is `g` in the subgroup generated by `x`, judged by searching the
/// external hyperplane instance up to `depth`.
pub fn decide_membership_bounded(
    x: &[TupleWord],
    g: &TupleWord,
    depth: usize,
    pair: &SchottkyPair,
    budget: u64,
) -> Result<Membership, ReductionError> {
    if g.is_identity() {
        return Ok(Membership::Trivial);
    }
    let inst = build_ulcp(x, g, pair)?;
    let cert = bfs_search(&inst, Predicate::MapsVIntoH, depth, budget)?;
    Ok(Membership::from_certificate(cert))
}

/// Depth at which `(w, 1)` is expected to appear in the Mihailova subgroup
/// when `w = 1` in `p`: one diagonal generator per letter plus one relator
/// generator per `min_relator_len` letters. Not a proven bound.
pub fn documented_depth(p: &Presentation, w: &FreeWord) -> usize {
    match p.min_relator_len() {
        None => w.len(),
        Some(r) => w.len() + w.len().div_ceil(r),
    }
}

/// Runs many queries against one subgroup, sharing a single breadth-first
/// ball. Each query carries its own depth limit; answers match what
/// [`decide_membership_bounded`] gives query by query, up to where the
/// shared budget runs out.
pub fn decide_membership_batch(
    x: &[TupleWord],
    queries: &[(TupleWord, usize)],
    pair: &SchottkyPair,
    budget: u64,
) -> Result<Vec<Membership>, ReductionError> {
    let mut answers: Vec<Option<Membership>> = vec![None; queries.len()];
    let mut instances: Vec<(usize, ExternalInstance, usize)> = Vec::new();
    for (i, (g, depth)) in queries.iter().enumerate() {
        if g.is_identity() {
            answers[i] = Some(Membership::Trivial);
        } else if *depth == 0 {
            return Err(crate::search::SearchError::ZeroDepth.into());
        } else {
            instances.push((i, build_ulcp(x, g, pair)?, *depth));
        }
    }
    let Some((_, first, _)) = instances.first() else {
        return Ok(answers.into_iter().map(|a| a.expect("answered")).collect());
    };
    let scaled = first.scaled_form().to_vec();
    let letters: Vec<Matrix<Integer>> = letters(first)?;
    let max_depth = instances.iter().map(|q| q.2).max().expect("nonempty");
    let mut open: Vec<usize> = (0..instances.len()).collect();
    let mut visited = 0u64;
    let stats = explore(&letters, max_depth, budget, |visit| {
        visited += 1;
        let row = visit.matrix.vec_mul(&scaled).expect("matching size");
        open.retain(|&q| {
            let (i, inst, limit) = &instances[q];
            if visit.depth > *limit || !dot(&row, inst.vector()).is_zero() {
                return true;
            }
            let cert = Certificate {
                word: Some(visit.word()),
                matrix: Some(visit.matrix.clone()),
                elements_visited: visited,
                depth_searched: visit.depth,
                outcome: Outcome::Found,
            };
            answers[*i] = Some(Membership::Member(cert));
            false
        });
        if open.iter().all(|&q| instances[q].2 < visit.depth) {
            Control::Stop
        } else {
            Control::Continue
        }
    });
    for q in open {
        let (i, _, limit) = &instances[q];
        let cert = if !stats.truncated || stats.depth >= *limit {
            Certificate {
                word: None,
                matrix: None,
                elements_visited: stats.per_depth.iter().take(limit + 1).sum(),
                depth_searched: stats.depth.min(*limit),
                outcome: Outcome::Exhausted,
            }
        } else {
            Certificate {
                word: None,
                matrix: None,
                elements_visited: stats.visited,
                depth_searched: stats.depth,
                outcome: Outcome::Truncated,
            }
        };
        answers[*i] = Some(Membership::from_certificate(cert));
    }
    Ok(answers.into_iter().map(|a| a.expect("answered")).collect())
}
