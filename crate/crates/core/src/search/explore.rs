use super::GenWord;
use crate::arith::{Matrix, Ring};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Control {
    Continue,
    Stop,
}

/// Statistics of a finished exploration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExploreStats {
    /// Distinct group elements visited, the identity included.
    pub visited: u64,
    /// Distinct elements first reached at each word length.
    pub per_depth: Vec<u64>,
    /// Deepest layer reached.
    pub depth: usize,
    pub truncated: bool,
    pub stopped: bool,
}

/// One group element handed to the visitor, with its position in the
/// breadth-first tree.
pub struct Visit<'a, S> {
    pub matrix: &'a Matrix<S>,
    pub depth: usize,
    index: usize,
    trail: &'a [Vec<(u32, u8)>],
}

impl<S> Visit<'_, S> {
    /// The lexicographically least shortest word reaching this element.
    pub fn word(&self) -> GenWord {
        let mut ranks = Vec::with_capacity(self.depth);
        let mut idx = self.index;
        for layer in (1..=self.depth).rev() {
            let (parent, rank) = self.trail[layer][idx];
            ranks.push(rank as usize);
            idx = parent as usize;
        }
        ranks.reverse();
        GenWord::from_ranks(ranks.into_iter())
    }
}

/// Breadth-first enumeration of the ball of radius `depth` in the Cayley
/// graph of the group generated by `letters`, deduplicated by exact matrix
/// equality.
///
/// `letters` lists generator matrices in the order `g1, g1^-1, g2, ...`;
/// products are formed by right multiplication. Every neighbour of layer
/// `d` lies in layer `d - 1`, `d` or `d + 1`, so only three layers of keys
/// are kept. Within each layer elements appear in the lexicographic order
/// of their least words. The visitor sees every distinct element once,
/// starting with the identity; at most `budget` elements are visited.
pub fn explore<S: Ring, F>(
    letters: &[Matrix<S>],
    depth: usize,
    budget: u64,
    mut visit: F,
) -> ExploreStats
where
    F: FnMut(&Visit<'_, S>) -> Control,
{
    assert!(letters.len() < usize::from(u8::MAX));
    let n = letters.first().map_or(0, Matrix::rows);
    let identity = Matrix::<S>::identity(n);
    let mut stats = ExploreStats {
        visited: 1,
        per_depth: vec![1],
        ..Default::default()
    };
    let mut trail: Vec<Vec<(u32, u8)>> = vec![vec![(0, 0)]];
    let root = Visit {
        matrix: &identity,
        depth: 0,
        index: 0,
        trail: &trail,
    };
    if visit(&root) == Control::Stop {
        stats.stopped = true;
        return stats;
    }
    let mut older: HashSet<Vec<u8>> = HashSet::new();
    let mut previous: HashSet<Vec<u8>> = HashSet::from([identity.key()]);
    let mut frontier = vec![identity];
    for d in 1..=depth {
        let mut current: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        trail.push(Vec::new());
        stats.per_depth.push(0);
        for (pi, parent) in frontier.iter().enumerate() {
            for (rank, g) in letters.iter().enumerate() {
                let m = parent.mul_unchecked(g);
                let key = m.key();
                if older.contains(&key) || previous.contains(&key) || current.contains(&key) {
                    continue;
                }
                if stats.visited == budget {
                    stats.truncated = true;
                    stats.depth = d - 1;
                    return stats;
                }
                stats.visited += 1;
                stats.per_depth[d] += 1;
                current.insert(key);
                trail[d].push((pi as u32, rank as u8));
                let v = Visit {
                    matrix: &m,
                    depth: d,
                    index: trail[d].len() - 1,
                    trail: &trail,
                };
                let control = visit(&v);
                next.push(m);
                if control == Control::Stop {
                    stats.stopped = true;
                    stats.depth = d;
                    return stats;
                }
            }
        }
        stats.depth = d;
        if next.is_empty() {
            break;
        }
        older = std::mem::replace(&mut previous, current);
        frontier = next;
    }
    stats
}
