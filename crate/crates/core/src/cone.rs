//! The conjugation action of `SL_2` on trace-zero matrices, the invariant
//! double cone `x^2 + yz = 0`, tangent forms, and eigenvectors on the cone.
//!
//! Coordinates: `(x, y, z)` stands for `[[x, y], [z, -x]]`.

use crate::arith::{
    dot, square_free_part, ArithError, Field, Integer, Matrix, QuadExt, Rational, Ring, Sign,
};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("expected a 2x2 matrix, got {0}x{1}")]
    Shape(usize, usize),
    #[error("determinant {0} is not 1")]
    NotSpecialLinear(String),
    #[error("trace {0} is not hyperbolic")]
    NotHyperbolic(String),
    #[error("trace {0} is not zero")]
    NonzeroTrace(String),
    #[error("expected a vector of length 3, got {0}")]
    VectorLength(usize),
    #[error("vector is not on the cone")]
    OffCone,
    #[error("the zero vector has no tangent plane")]
    ZeroVector,
    #[error("orientation witness fixes the tangent plane value at zero")]
    DegenerateWitness,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

fn entries<S: Ring>(m: &Matrix<S>) -> Result<[&S; 4], ConeError> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(ConeError::Shape(m.rows(), m.cols()));
    }
    Ok([&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]])
}

/// The 3x3 matrix of `X -> M X M^-1` on trace-zero coordinates.
pub fn phi<S: Ring>(m: &Matrix<S>) -> Result<Matrix<S>, ConeError> {
    let [a, b, c, d] = entries(m)?;
    let det = m.det()?;
    if !det.is_one() {
        return Err(ConeError::NotSpecialLinear(det.to_string()));
    }
    let two = S::from_i64(2);
    let data = vec![
        a.mul_ref(d).add_ref(&b.mul_ref(c)),
        a.mul_ref(c).neg_ref(),
        b.mul_ref(d),
        two.mul_ref(a).mul_ref(b).neg_ref(),
        a.mul_ref(a),
        b.mul_ref(b).neg_ref(),
        two.mul_ref(c).mul_ref(d),
        c.mul_ref(c).neg_ref(),
        d.mul_ref(d),
    ];
    Ok(Matrix::new(3, 3, data)?)
}

fn check_len<S>(v: &[S]) -> Result<(), ConeError> {
    if v.len() != 3 {
        return Err(ConeError::VectorLength(v.len()));
    }
    Ok(())
}

/// `Q(x, y, z) = -(x^2 + yz)`.
pub fn quadratic_form<S: Ring>(v: &[S]) -> S {
    v[0].mul_ref(&v[0]).add_ref(&v[1].mul_ref(&v[2])).neg_ref()
}

/// The symmetric bilinear form with `B(v, v) = Q(v)`.
pub fn bilinear_form<S: Field>(v: &[S], w: &[S]) -> S {
    tangent_coefficients(v)
        .iter()
        .zip(w)
        .fold(S::zero(), |acc, (c, x)| acc.add_ref(&c.mul_ref(x)))
}

/// Coefficients of `x -> B(v, x)`: `(-v1, -v3/2, -v2/2)`.
fn tangent_coefficients<S: Field>(v: &[S]) -> Vec<S> {
    let half = S::from_i64(2).inv().expect("2 is invertible");
    vec![
        v[0].neg_ref(),
        v[2].mul_ref(&half).neg_ref(),
        v[1].mul_ref(&half).neg_ref(),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeClass {
    OffCone,
    Origin,
    /// `y > z`
    Plus,
    /// `y < z`
    Minus,
}

pub fn cone_membership<S: Ring>(v: &[S]) -> Result<ConeClass, ConeError> {
    check_len(v)?;
    if v.iter().all(Zero::is_zero) {
        return Ok(ConeClass::Origin);
    }
    if !quadratic_form(v).is_zero() {
        return Ok(ConeClass::OffCone);
    }
    Ok(match v[1].sub_ref(&v[2]).real_sign() {
        Sign::Positive => ConeClass::Plus,
        Sign::Negative => ConeClass::Minus,
        Sign::Zero => ConeClass::Origin,
    })
}

/// A linear form `f(x) = sign * B(base, x)` vanishing on the plane tangent
/// to the cone along `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentForm<S> {
    base: Vec<S>,
    sign: i8,
    coefficients: Vec<S>,
}

impl<S: Ring> TangentForm<S> {
    pub fn base(&self) -> &[S] {
        &self.base
    }
    pub fn sign(&self) -> i8 {
        self.sign
    }
    pub fn coefficients(&self) -> &[S] {
        &self.coefficients
    }
    pub fn eval(&self, x: &[S]) -> S {
        dot(&self.coefficients, x)
    }
}

/// Tangent form along `v`, signed so that `f(witness * v) > 0`.
pub fn tangent_form_at<S: Field>(
    v: &[S],
    witness: &Matrix<S>,
) -> Result<TangentForm<S>, ConeError> {
    match cone_membership(v)? {
        ConeClass::Origin => return Err(ConeError::ZeroVector),
        ConeClass::OffCone => return Err(ConeError::OffCone),
        _ => {}
    }
    let coefficients = tangent_coefficients(v);
    let moved = witness.mul_vec(v)?;
    let (sign, coefficients) = match dot(&coefficients, &moved).real_sign() {
        Sign::Positive => (1, coefficients),
        Sign::Negative => (-1, coefficients.iter().map(Ring::neg_ref).collect()),
        Sign::Zero => return Err(ConeError::DegenerateWitness),
    };
    Ok(TangentForm {
        base: v.to_vec(),
        sign,
        coefficients,
    })
}

/// `u = (0, 1, 0)`.
pub fn base_vector<S: Ring>() -> Vec<S> {
    vec![S::zero(), S::one(), S::zero()]
}

/// Tangent form along `u = (0, 1, 0)`, i.e. `f = -z/2`, oriented by the
/// first canonical generator.
pub fn standard_tangent() -> TangentForm<Rational> {
    let s1: Matrix<Rational> = Matrix::from_i64(2, &[3, 2, 1, 1]);
    let witness = phi(&s1).expect("det 1");
    tangent_form_at(&base_vector(), &witness).expect("u is on the cone")
}

/// Coordinates of a trace-zero matrix.
pub fn trace_zero_coords<S: Ring>(m: &Matrix<S>) -> Result<Vec<S>, ConeError> {
    let [a, b, c, _] = entries(m)?;
    let t = m.trace();
    if !t.is_zero() {
        return Err(ConeError::NonzeroTrace(t.to_string()));
    }
    Ok(vec![a.clone(), b.clone(), c.clone()])
}

/// The trace-zero matrix with the given coordinates.
pub fn from_coords<S: Ring>(v: &[S]) -> Result<Matrix<S>, ConeError> {
    check_len(v)?;
    Ok(Matrix::new(
        2,
        2,
        vec![v[0].clone(), v[1].clone(), v[2].clone(), v[0].neg_ref()],
    )?)
}

/// Coordinates of `2A - tr(A) I`.
pub fn adjoint_vector<S: Ring>(a: &Matrix<S>) -> Result<Vec<S>, ConeError> {
    let [p, q, r, s] = entries(a)?;
    let two = S::from_i64(2);
    Ok(vec![p.sub_ref(s), two.mul_ref(q), two.mul_ref(r)])
}

/// An eigenvector of `phi(A)` on the cone together with its eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeEigen {
    pub vector: Vec<QuadExt>,
    pub eigenvalue: QuadExt,
    /// Square-free part of `tr(A)^2 - 4`.
    pub radicand: u64,
}

/// For hyperbolic `A` in `SL_2(Z)`, let `mu = (t + sqrt(t^2 - 4)) / 2`.
/// The rank-one trace-zero matrix `w l`, built from the right eigenvector
/// `w` for `mu` and the left eigenvector `l` for `1/mu`, is scaled by
/// `mu^2` under `phi(A)`.
pub fn eigenvector_on_cone(a: &Matrix<Integer>) -> Result<ConeEigen, ConeError> {
    let [p, q, r, _] = entries(a)?;
    let det = a.det()?;
    if !det.is_one() {
        return Err(ConeError::NotSpecialLinear(det.to_string()));
    }
    let t = a.trace();
    if t.abs() <= Integer::from(2) {
        return Err(ConeError::NotHyperbolic(t.to_string()));
    }
    let disc = &t * &t - Integer::from(4);
    let (root, d) = square_free_part(&disc).map_err(ArithError::from)?;
    if d == 1 {
        return Err(ConeError::Internal(format!(
            "tr^2 - 4 = {disc} is a square"
        )));
    }
    let half = |n: &Integer| Rational::new(n.clone(), Integer::from(2));
    let mu = QuadExt::new(half(&t), half(&root), d)?;
    let mu_inv = mu.conjugate();
    let int = |n: &Integer| QuadExt::from(n.clone());
    let (p, q, r) = (int(p), int(q), int(r));
    // w = (q, mu - p), l = (r, 1/mu - p)
    let w = [q.clone(), mu.sub_ref(&p)];
    let l = [r.clone(), mu_inv.sub_ref(&p)];
    let raw = vec![
        w[0].mul_ref(&l[0]),
        w[0].mul_ref(&l[1]),
        w[1].mul_ref(&l[0]),
    ];
    let vector = normalize(raw)?;
    let eigenvalue = mu.mul_ref(&mu);

    let image = phi(&a.promote::<QuadExt>())?.mul_vec(&vector)?;
    let scaled: Vec<QuadExt> = vector.iter().map(|x| x.mul_ref(&eigenvalue)).collect();
    if image != scaled || !quadratic_form(&vector).is_zero() {
        return Err(ConeError::Internal("eigenvector check failed".into()));
    }
    Ok(ConeEigen {
        vector,
        eigenvalue,
        radicand: d,
    })
}

/// Scales so the first nonzero coordinate is 1, then to the smallest
/// integral multiple.
fn normalize(v: Vec<QuadExt>) -> Result<Vec<QuadExt>, ConeError> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .ok_or(ConeError::ZeroVector)?;
    let inv = lead.inv().expect("nonzero");
    let v: Vec<QuadExt> = v.iter().map(|x| x.mul_ref(&inv)).collect();
    let parts = || v.iter().flat_map(|x| [x.a().clone(), x.b().clone()]);
    let lcm = parts().fold(Integer::one(), |acc, q| acc.lcm(q.denom()));
    let gcd = parts()
        .map(|q| (q * Rational::from_integer(lcm.clone())).to_integer())
        .fold(Integer::zero(), |acc, n| acc.gcd(&n));
    let factor = QuadExt::rational(Rational::new(lcm, gcd));
    Ok(v.iter().map(|x| x.mul_ref(&factor)).collect())
}
