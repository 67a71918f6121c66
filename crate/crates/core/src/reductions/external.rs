use super::{check_generators, check_tuple, tuple_matrix, Provenance, ReductionError};
use crate::arith::{dot, Integer, Matrix, Rational};
use crate::cone::{base_vector, phi, standard_tangent};
use crate::free::TupleWord;
use crate::presentation::{mihailova, Presentation};
use crate::schottky::SchottkyPair;
use crate::search::{Predicate, SearchInstance};
use num_integer::Integer as _;
use num_traits::{One, Zero};

/// Six-dimensional external hyperplane instance: does some group element
/// map `v` into `H = ker f`, where `v` lies outside `H`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExternalInstance {
    generators: Vec<Matrix<Integer>>,
    vector: Vec<Integer>,
    form: Vec<Rational>,
    provenance: Provenance,
    // `form` times the lcm of its denominators
    scaled_form: Vec<Integer>,
}

impl ExternalInstance {
    pub fn new(
        generators: Vec<Matrix<Integer>>,
        vector: Vec<Integer>,
        form: Vec<Rational>,
        provenance: Provenance,
    ) -> Result<Self, ReductionError> {
        let n = vector.len();
        if form.len() != n {
            return Err(ReductionError::Invalid(
                "form and vector lengths differ".into(),
            ));
        }
        check_generators(&generators, n)?;
        let lcm = form
            .iter()
            .fold(Integer::one(), |acc, q| acc.lcm(q.denom()));
        let scaled_form: Vec<Integer> = form
            .iter()
            .map(|q| (q * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        if dot(&scaled_form, &vector).is_zero() {
            return Err(ReductionError::Invalid("v lies in H".into()));
        }
        Ok(ExternalInstance {
            generators,
            vector,
            form,
            provenance,
            scaled_form,
        })
    }

    pub fn vector(&self) -> &[Integer] {
        &self.vector
    }
    pub fn form(&self) -> &[Rational] {
        &self.form
    }
    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
    pub fn dimension(&self) -> usize {
        self.vector.len()
    }

    /// `f(h v)`.
    pub fn form_value(&self, h: &Matrix<Integer>) -> Rational {
        let hv = h.mul_vec(&self.vector).expect("square of matching size");
        dot(
            &self.form,
            &hv.into_iter()
                .map(Rational::from_integer)
                .collect::<Vec<_>>(),
        )
    }

    /// `f_i(h_i v_i)` for each 3x3 diagonal block.
    pub fn block_values(&self, h: &Matrix<Integer>) -> Vec<Rational> {
        let hv: Vec<Rational> = h
            .mul_vec(&self.vector)
            .expect("square of matching size")
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        hv.chunks(3)
            .zip(self.form.chunks(3))
            .map(|(x, f)| dot(f, x))
            .collect()
    }

    pub(crate) fn scaled_form(&self) -> &[Integer] {
        &self.scaled_form
    }
}

impl SearchInstance for ExternalInstance {
    type Scalar = Integer;
    fn kind(&self) -> &'static str {
        "external-hyperplane"
    }
    fn generators(&self) -> &[Matrix<Integer>] {
        &self.generators
    }
    fn default_predicate(&self) -> Predicate {
        Predicate::MapsVIntoH
    }
    fn test(&self, _: Predicate, h: &Matrix<Integer>) -> bool {
        let row = h.vec_mul(&self.scaled_form).expect("matching size");
        dot(&row, &self.vector).is_zero()
    }
}

/// Generators `diag(phi(x1), phi(x2))` for `x` in `X`; `v` is `phi(g)^-1`
/// applied blockwise to `(u, u)`; the form is the standard tangent form on
/// each block. Some element maps `v` into `H` iff `g` lies in `<X>`.
pub fn build_ulcp(
    x: &[TupleWord],
    g: &TupleWord,
    pair: &SchottkyPair,
) -> Result<ExternalInstance, ReductionError> {
    build(x, g, pair, None)
}

/// [`build_ulcp`] over the Mihailova generators of `p`.
pub fn build_ulcp_for(
    p: &Presentation,
    g: &TupleWord,
    pair: &SchottkyPair,
) -> Result<ExternalInstance, ReductionError> {
    let m = mihailova(p, 2)?;
    build(m.generators(), g, pair, Some(p.name()))
}

fn build(
    x: &[TupleWord],
    g: &TupleWord,
    pair: &SchottkyPair,
    name: Option<&str>,
) -> Result<ExternalInstance, ReductionError> {
    check_tuple(g, 2)?;
    if g.is_identity() {
        return Err(ReductionError::IdentityQuery);
    }
    let generators = x
        .iter()
        .map(|t| {
            check_tuple(t, 2)?;
            tuple_matrix(pair, t)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let u: Vec<Integer> = base_vector();
    let mut vector = Vec::with_capacity(6);
    for c in g.components() {
        let inv = phi(&pair.eval_word(&c.inverse())?)?;
        vector.extend(inv.mul_vec(&u)?);
    }
    let f = standard_tangent();
    let form: Vec<Rational> = f
        .coefficients()
        .iter()
        .chain(f.coefficients())
        .cloned()
        .collect();
    ExternalInstance::new(
        generators,
        vector,
        form,
        super::Provenance::new(name, g, pair),
    )
}
