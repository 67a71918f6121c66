use super::PresentationError;
use crate::free::FreeWord;

/// A permutation of `0..n`, stored as the image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PresentationError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(PresentationError::BadPermutation(images));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` followed by `other`, acting on the right.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Decision procedure for the word problem of a presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordOracle {
    /// No relators: `w = 1` iff `w` freely reduces to the empty word.
    Free,
    /// `w = 1` iff every exponent sum vanishes.
    FreeAbelian,
    /// `w = 1` iff its permutation image is trivial. Sound only for a
    /// faithful permutation representation, which the caller asserts.
    FiniteImages {
        images: Vec<Permutation>,
        faithful: bool,
    },
    /// Every word is the identity.
    Trivial,
    /// Free product of cyclic groups, one per generator; order 0 means
    /// infinite cyclic. Decided by syllable reduction.
    CyclicFreeProduct { orders: Vec<u64> },
}

impl WordOracle {
    pub fn kind(&self) -> &'static str {
        match self {
            WordOracle::Free => "free",
            WordOracle::FreeAbelian => "free-abelian",
            WordOracle::FiniteImages { .. } => "finite-via-images",
            WordOracle::Trivial => "trivial-group",
            WordOracle::CyclicFreeProduct { .. } => "cyclic-free-product",
        }
    }

    /// Checks the oracle against a presentation's rank and relators.
    pub(crate) fn check(&self, k: usize, relators: &[FreeWord]) -> Result<(), PresentationError> {
        let incompatible = |reason: String| PresentationError::IncompatibleOracle {
            kind: self.kind().to_string(),
            reason,
        };
        match self {
            WordOracle::Free if !relators.is_empty() => {
                return Err(incompatible("a free oracle admits no relators".into()))
            }
            WordOracle::FiniteImages { images, faithful } => {
                if !faithful {
                    return Err(incompatible("images are not asserted faithful".into()));
                }
                if images.len() != k {
                    return Err(incompatible(format!(
                        "{} images for {k} generators",
                        images.len()
                    )));
                }
                if images.windows(2).any(|p| p[0].degree() != p[1].degree()) {
                    return Err(incompatible("images act on different sets".into()));
                }
            }
            WordOracle::CyclicFreeProduct { orders } if orders.len() != k => {
                return Err(incompatible(format!(
                    "{} orders for {k} generators",
                    orders.len()
                )));
            }
            _ => {}
        }
        if let Some(r) = relators.iter().find(|r| !self.decide(r)) {
            return Err(incompatible(format!(
                "relator {} is not the identity",
                r.to_x_string()
            )));
        }
        Ok(())
    }

    /// Decides `w = 1`; assumes [`WordOracle::check`] passed for `w`'s rank.
    pub(crate) fn decide(&self, w: &FreeWord) -> bool {
        match self {
            WordOracle::Free => w.is_identity(),
            WordOracle::FreeAbelian => w.exponent_sums().iter().all(|&s| s == 0),
            WordOracle::Trivial => true,
            WordOracle::FiniteImages { images, .. } => {
                let inverses: Vec<_> = images.iter().map(Permutation::inverse).collect();
                let degree = images.first().map_or(0, Permutation::degree);
                w.letters()
                    .iter()
                    .fold(Permutation::identity(degree), |acc, &l| {
                        let i = l.unsigned_abs() as usize - 1;
                        acc.then(if l > 0 { &images[i] } else { &inverses[i] })
                    })
                    .is_identity()
            }
            WordOracle::CyclicFreeProduct { orders } => {
                let mut stack: Vec<(usize, i64)> = Vec::new();
                for &l in w.letters() {
                    let g = l.unsigned_abs() as usize - 1;
                    let order = orders[g] as i64;
                    let step = i64::from(l.signum());
                    let reduce = |e: i64| if order > 0 { e.rem_euclid(order) } else { e };
                    match stack.last_mut() {
                        Some((top, e)) if *top == g => {
                            *e = reduce(*e + step);
                            if *e == 0 {
                                stack.pop();
                            }
                        }
                        _ => {
                            let e = reduce(step);
                            if e != 0 {
                                stack.push((g, e));
                            }
                        }
                    }
                }
                stack.is_empty()
            }
        }
    }
}
