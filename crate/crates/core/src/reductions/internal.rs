use super::{
    check_generators, check_tuple, is_block_diagonal, tuple_matrix, Provenance, ReductionError,
};
use crate::arith::{dot, Integer, Matrix, QuadExt};
use crate::cone::{eigenvector_on_cone, phi, quadratic_form, tangent_form_at};
use crate::free::{enumerate_reduced, FreeWord, TupleWord};
use crate::presentation::{mihailova, Presentation};
use crate::schottky::SchottkyPair;
use crate::search::{Predicate, SearchInstance};
use num_traits::Zero;

/// Base vector and tangent form of one 3x3 block, both over the block's
/// own quadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalBlock {
    pub base: Vec<QuadExt>,
    pub form: Vec<QuadExt>,
}

impl InternalBlock {
    /// `f(h v)` for the 3x3 integer block `h`.
    pub fn value(&self, h: &Matrix<Integer>) -> QuadExt {
        let hv = h
            .promote::<QuadExt>()
            .mul_vec(&self.base)
            .expect("3x3 block");
        dot(&self.form, &hv)
    }
}

/// Nine-dimensional internal hyperplane instance: does some non-identity
/// element map `v = (v1, v2, v3)` into `H = ker(f1 + f2 + f3)`? Each `fi`
/// is nonnegative on the orbit of `vi`, so the sum vanishes iff every term
/// does, and the test runs blockwise inside each quadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalInstance {
    generators: Vec<Matrix<Integer>>,
    blocks: Vec<InternalBlock>,
    provenance: Provenance,
}

impl InternalInstance {
    pub fn new(
        generators: Vec<Matrix<Integer>>,
        blocks: Vec<InternalBlock>,
        provenance: Provenance,
    ) -> Result<Self, ReductionError> {
        check_generators(&generators, 3 * blocks.len())?;
        if generators.iter().any(|g| !is_block_diagonal(g, 3)) {
            return Err(ReductionError::Invalid(
                "generators are not block diagonal".into(),
            ));
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.base.len() != 3 || b.form.len() != 3 {
                return Err(ReductionError::Invalid(format!(
                    "block {} is not 3-dimensional",
                    i + 1
                )));
            }
            if b.base.iter().all(Zero::is_zero) || !quadratic_form(&b.base).is_zero() {
                return Err(ReductionError::Invalid(format!(
                    "block {} base is not on the cone",
                    i + 1
                )));
            }
            if !b.value(&Matrix::identity(3)).is_zero() {
                return Err(ReductionError::Invalid(format!(
                    "block {} base is not in H",
                    i + 1
                )));
            }
        }
        Ok(InternalInstance {
            generators,
            blocks,
            provenance,
        })
    }

    pub fn blocks(&self) -> &[InternalBlock] {
        &self.blocks
    }
    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
    pub fn dimension(&self) -> usize {
        3 * self.blocks.len()
    }

    /// `f_i(h_i v_i)` per block.
    pub fn block_values(&self, h: &Matrix<Integer>) -> Vec<QuadExt> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| b.value(&h.block(i, 3)))
            .collect()
    }

    /// Concatenated base vectors.
    pub fn vector(&self) -> Vec<QuadExt> {
        self.blocks
            .iter()
            .flat_map(|b| b.base.iter().cloned())
            .collect()
    }

    /// Concatenated form coefficients.
    pub fn form(&self) -> Vec<QuadExt> {
        self.blocks
            .iter()
            .flat_map(|b| b.form.iter().cloned())
            .collect()
    }
}

impl SearchInstance for InternalInstance {
    type Scalar = Integer;
    fn kind(&self) -> &'static str {
        "internal-hyperplane"
    }
    fn generators(&self) -> &[Matrix<Integer>] {
        &self.generators
    }
    fn default_predicate(&self) -> Predicate {
        Predicate::NonidentityMapsVIntoH
    }
    fn test(&self, _: Predicate, h: &Matrix<Integer>) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(i, b)| b.value(&h.block(i, 3)).is_zero())
    }
}

/// First word in shortlex order that does not commute with `w`.
pub fn orientation_witness(w: &FreeWord) -> FreeWord {
    enumerate_reduced(2, w.len() + 1)
        .find(|u| !u.commutes_with(w))
        .expect("a free group of rank 2 is not abelian")
}

/// Generators are the `phi`-triples of the three-factor Mihailova
/// generators of `p`. Block `i` carries the cone eigenvector of
/// `phi(eval w_i)` and its tangent form, oriented by the first word not
/// commuting with `w_i`.
pub fn build_urcp(
    p: &Presentation,
    w: &TupleWord,
    pair: &SchottkyPair,
) -> Result<InternalInstance, ReductionError> {
    check_tuple(w, 3)?;
    if let Some(i) = w.components().iter().position(FreeWord::is_identity) {
        return Err(ReductionError::IdentityComponent(i + 1));
    }
    let m = mihailova(p, 3)?;
    let generators = m
        .generators()
        .iter()
        .map(|t| tuple_matrix(pair, t))
        .collect::<Result<Vec<_>, _>>()?;
    let mut blocks = Vec::with_capacity(3);
    for c in w.components() {
        let eigen = eigenvector_on_cone(&pair.eval_word(c)?)?;
        let witness = phi(&pair.eval_word(&orientation_witness(c))?)?.promote::<QuadExt>();
        let form = tangent_form_at(&eigen.vector, &witness)?;
        blocks.push(InternalBlock {
            base: eigen.vector,
            form: form.coefficients().to_vec(),
        });
    }
    InternalInstance::new(generators, blocks, Provenance::new(Some(p.name()), w, pair))
}
