use super::{check_generators, tuple_matrix, Provenance, ReductionError};
use crate::arith::{Integer, Matrix};
use crate::cone::adjoint_vector;
use crate::free::FreeWord;
use crate::presentation::{mihailova, Presentation};
use crate::schottky::SchottkyPair;
use crate::search::{Predicate, SearchInstance};

/// Nine-dimensional integral stabilizer instance: is `v` fixed by some
/// non-identity group element?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerInstance {
    generators: Vec<Matrix<Integer>>,
    vector: Vec<Integer>,
    provenance: Provenance,
}

impl StabilizerInstance {
    pub fn new(
        generators: Vec<Matrix<Integer>>,
        vector: Vec<Integer>,
        provenance: Provenance,
    ) -> Result<Self, ReductionError> {
        check_generators(&generators, vector.len())?;
        Ok(StabilizerInstance {
            generators,
            vector,
            provenance,
        })
    }

    pub fn vector(&self) -> &[Integer] {
        &self.vector
    }
    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

impl SearchInstance for StabilizerInstance {
    type Scalar = Integer;
    fn kind(&self) -> &'static str {
        "stabilizer"
    }
    fn generators(&self) -> &[Matrix<Integer>] {
        &self.generators
    }
    fn default_predicate(&self) -> Predicate {
        Predicate::NonidentityFixesV
    }
    fn test(&self, _: Predicate, h: &Matrix<Integer>) -> bool {
        h.mul_vec(&self.vector).expect("matching size") == self.vector
    }
}

/// Generators are the `phi`-triples of the three-factor Mihailova
/// generators of `p`; `v` stacks the adjoint vectors of `a`, `b` and `w`.
/// A conjugation fixes `v` iff it centralizes `(a, b, w)`.
pub fn build_stabilizer(
    p: &Presentation,
    w: &FreeWord,
    pair: &SchottkyPair,
) -> Result<StabilizerInstance, ReductionError> {
    if w.rank() != 2 {
        return Err(ReductionError::Rank(w.rank()));
    }
    if w.is_identity() {
        return Err(ReductionError::IdentityQuery);
    }
    let m = mihailova(p, 3)?;
    let generators = m
        .generators()
        .iter()
        .map(|t| tuple_matrix(pair, t))
        .collect::<Result<Vec<_>, _>>()?;
    let mut vector = Vec::with_capacity(9);
    for word in [
        FreeWord::generator(2, 1),
        FreeWord::generator(2, 2),
        w.clone(),
    ] {
        vector.extend(adjoint_vector(&pair.eval_word(&word)?)?);
    }
    StabilizerInstance::new(generators, vector, Provenance::new(Some(p.name()), w, pair))
}
