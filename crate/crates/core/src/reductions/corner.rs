use super::{ExternalInstance, InternalInstance, Provenance, ReductionError};
use crate::arith::{promote_vec, Field, Invertible, Matrix, MultiQuad, Rational};
use crate::search::{Predicate, SearchInstance};
use num_traits::{One, Zero};

/// A group given by the conjugates `T g T^-1` of hyperplane-instance
/// generators, where `(T h T^-1)` has a zero at `corner` iff the original
/// `h` maps `v` into `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerInstance<S> {
    generators: Vec<Matrix<S>>,
    corner: (usize, usize),
    basis_change: Matrix<S>,
    basis_change_inverse: Matrix<S>,
    provenance: Provenance,
}

impl<S: Invertible + Field> CornerInstance<S> {
    pub fn new(
        generators: Vec<Matrix<S>>,
        corner: (usize, usize),
        basis_change: Matrix<S>,
        provenance: Provenance,
    ) -> Result<Self, ReductionError> {
        let n = basis_change.rows();
        if corner != (1, 1) && corner != (1, n) {
            return Err(ReductionError::Invalid(format!(
                "corner {corner:?} is neither (1,1) nor (1,{n})"
            )));
        }
        if generators.is_empty() || generators.iter().any(|g| g.rows() != n || g.cols() != n) {
            return Err(ReductionError::Invalid(format!(
                "generators must be {n}x{n}"
            )));
        }
        let basis_change_inverse = basis_change.inverse()?;
        Ok(CornerInstance {
            generators,
            corner,
            basis_change,
            basis_change_inverse,
            provenance,
        })
    }

    pub fn dimension(&self) -> usize {
        self.basis_change.rows()
    }
    /// 1-based corner position.
    pub fn corner(&self) -> (usize, usize) {
        self.corner
    }
    pub fn basis_change(&self) -> &Matrix<S> {
        &self.basis_change
    }
    pub fn basis_change_inverse(&self) -> &Matrix<S> {
        &self.basis_change_inverse
    }
    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// `T h T^-1`.
    pub fn conjugate(&self, h: &Matrix<S>) -> Matrix<S> {
        self.basis_change
            .mul_unchecked(h)
            .mul_unchecked(&self.basis_change_inverse)
    }

    pub fn corner_entry(&self, m: &Matrix<S>) -> S {
        m[(self.corner.0 - 1, self.corner.1 - 1)].clone()
    }
}

impl<S: Invertible + Field> SearchInstance for CornerInstance<S> {
    type Scalar = S;
    fn kind(&self) -> &'static str {
        "corner"
    }
    fn generators(&self) -> &[Matrix<S>] {
        &self.generators
    }
    fn default_predicate(&self) -> Predicate {
        if self.corner == (1, 1) {
            Predicate::CornerZero
        } else {
            Predicate::NonidentityCornerZero
        }
    }
    fn test(&self, _: Predicate, h: &Matrix<S>) -> bool {
        self.corner_entry(h).is_zero()
    }
}

/// `e_i - (f_i / f_p) e_p` for every `i != p`: a basis of `ker f`.
fn kernel_basis<S: Field>(f: &[S], p: usize) -> Vec<Vec<S>> {
    let n = f.len();
    (0..n)
        .filter(|&i| i != p)
        .map(|i| {
            let mut k = vec![S::zero(); n];
            k[i] = S::one();
            k[p] = f[i].div_ref(&f[p]).expect("f_p is nonzero").neg_ref();
            k
        })
        .collect()
}

fn from_columns<S: Field>(cols: &[Vec<S>]) -> Matrix<S> {
    let n = cols.len();
    let rows = (0..n)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    Matrix::from_rows(rows).expect("square")
}

fn conjugates<S: Field + From<crate::arith::Integer>>(
    generators: &[Matrix<crate::arith::Integer>],
    t: &Matrix<S>,
    t_inv: &Matrix<S>,
) -> Vec<Matrix<S>> {
    generators
        .iter()
        .map(|g| t.mul_unchecked(&g.promote::<S>()).mul_unchecked(t_inv))
        .collect()
}

/// `T` has first row `f / f(v)` and `T v = e1`, so `(T h T^-1)[1,1] =
/// f(h v) / f(v)`, which vanishes iff `h v` lies in `H`.
pub fn external_to_corner(
    inst: &ExternalInstance,
) -> Result<CornerInstance<Rational>, ReductionError> {
    let f = inst.form();
    let v: Vec<Rational> = promote_vec(inst.vector());
    let p = f
        .iter()
        .position(|x| !x.is_zero())
        .ok_or(ReductionError::Completion)?;
    let mut cols = vec![v];
    cols.extend(kernel_basis(f, p));
    let s = from_columns(&cols);
    let t = s.inverse().map_err(|_| ReductionError::Completion)?;
    let generators = conjugates(inst.generators(), &t, &s);
    CornerInstance::new(generators, (1, 1), t, inst.provenance().clone())
}

/// `T` has first row `f` and `T^-1` has last column `v`, so
/// `(T h T^-1)[1,n] = f(h v)`. Entries live in the compositum of the
/// blocks' quadratic fields.
pub fn internal_to_corner(
    inst: &InternalInstance,
) -> Result<CornerInstance<MultiQuad>, ReductionError> {
    let f: Vec<MultiQuad> = promote_vec(&inst.form());
    let v: Vec<MultiQuad> = promote_vec(&inst.vector());
    let n = f.len();
    let p = f
        .iter()
        .position(|x| !x.is_zero())
        .ok_or(ReductionError::Completion)?;
    let mut first = vec![MultiQuad::zero(); n];
    first[p] = MultiQuad::one().div_ref(&f[p]).expect("nonzero");
    let kernel = kernel_basis(&f, p);
    for q in 0..kernel.len() {
        let mut cols = vec![first.clone()];
        cols.extend(
            kernel
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != q)
                .map(|(_, k)| k.clone()),
        );
        cols.push(v.clone());
        let s = from_columns(&cols);
        if let Ok(t) = s.inverse() {
            let generators = conjugates(inst.generators(), &t, &s);
            return CornerInstance::new(generators, (1, n), t, inst.provenance().clone());
        }
    }
    Err(ReductionError::Completion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{dot, Integer};
    use crate::free::TupleWord;
    use crate::presentation::samples::sample;
    use crate::reductions::{build_ulcp, build_urcp};
    use crate::schottky::SchottkyPair;
    use crate::search::{explore, Control};

    fn t(s: &str) -> TupleWord {
        TupleWord::parse(2, s).unwrap()
    }

    #[test]
    fn external_corner_matches_form() {
        let pair = SchottkyPair::canonical();
        let inst = build_ulcp(&[t("(a,a)"), t("(b,b)")], &t("(ab,ab)"), &pair).unwrap();
        let c = external_to_corner(&inst).unwrap();
        assert_eq!(c.default_predicate(), Predicate::CornerZero);
        let fv = inst.form_value(&Matrix::identity(6));
        let v: Vec<Rational> = promote_vec(inst.vector());
        assert_eq!(c.basis_change().mul_vec(&v).unwrap()[0], Rational::one());
        let letters: Vec<Matrix<Integer>> = crate::search::letters(&inst).unwrap();
        explore(&letters, 3, 10_000, |visit| {
            let h = &visit.matrix;
            let conj = c.conjugate(&h.promote());
            assert_eq!(c.corner_entry(&conj) * fv.clone(), inst.form_value(h));
            assert_eq!(
                c.test(Predicate::CornerZero, &conj),
                inst.test(Predicate::MapsVIntoH, h)
            );
            Control::Continue
        });
    }

    #[test]
    fn internal_corner_matches_form() {
        let pair = SchottkyPair::canonical();
        let inst = build_urcp(&sample("z2-star-z").unwrap(), &t("(a,b,ab)"), &pair).unwrap();
        let c = internal_to_corner(&inst).unwrap();
        assert_eq!(c.corner(), (1, 9));
        let f: Vec<MultiQuad> = promote_vec(&inst.form());
        assert_eq!(c.basis_change().row(0), &f[..]);
        let letters: Vec<Matrix<Integer>> = crate::search::letters(&inst).unwrap();
        explore(&letters, 1, 100, |visit| {
            let h = &visit.matrix;
            let hv = h
                .promote::<MultiQuad>()
                .mul_vec(&promote_vec(&inst.vector()))
                .unwrap();
            assert_eq!(c.corner_entry(&c.conjugate(&h.promote())), dot(&f, &hv));
            Control::Continue
        });
    }
}
