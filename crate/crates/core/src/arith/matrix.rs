use super::{ArithError, Field, Integer, Rational, Ring};
use std::fmt;

/// Dense row-major matrix over an exact scalar kind.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.cols.max(1)))
            .finish()
    }
}

impl<S: Ring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Ring> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self, ArithError> {
        if data.len() != rows * cols {
            return Err(ArithError::DimensionMismatch {
                left: format!("{rows}x{cols}"),
                right: format!("{} entries", data.len()),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ArithError::DimensionMismatch {
                left: format!("{c} columns"),
                right: "ragged rows".into(),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Square matrix from small integers, row-major.
    pub fn from_i64(n: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), n * n);
        Matrix {
            rows: n,
            cols: n,
            data: entries.iter().map(|&x| S::from_i64(x)).collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn entries(&self) -> &[S] {
        &self.data
    }
    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }
    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[S]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc.add_ref(&self[(i, i)]))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Entrywise conversion into a wider scalar kind.
    pub fn promote<T: Ring + From<S>>(&self) -> Matrix<T> {
        self.map(|x| T::from(x.clone()))
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|x| x.mul_ref(k))
    }

    fn radicand_union(&self, other: &Self) -> Vec<u64> {
        let mut all: Vec<u64> = self
            .data
            .iter()
            .chain(other.data.iter())
            .flat_map(Ring::radicands)
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Exact product, checking shapes and that the entries live in a common
    /// field of this scalar kind.
    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.cols != other.rows {
            return Err(ArithError::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        if S::HAS_RADICANDS {
            let rads = self.radicand_union(other);
            if !S::admits(&rads) {
                return Err(ArithError::IncompatibleRadicands(rads));
            }
        }
        Ok(self.mul_unchecked(other))
    }

    /// Product without shape or field checks. Zero entries of `self` are
    /// skipped, which makes block-diagonal products cheap.
    pub fn mul_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.cols, other.rows);
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let mut out = vec![S::zero(); n * p];
        for i in 0..n {
            for k in 0..m {
                let a = &self.data[i * m + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..p {
                    let b = &other.data[k * p + j];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out[i * p + j];
                    *slot = slot.add_ref(&a.mul_ref(b));
                }
            }
        }
        Matrix {
            rows: n,
            cols: p,
            data: out,
        }
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>, ArithError> {
        if v.len() != self.cols {
            return Err(ArithError::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("vector of length {}", v.len()),
            });
        }
        Ok((0..self.rows).map(|i| super::dot(self.row(i), v)).collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[S]) -> Result<Vec<S>, ArithError> {
        if v.len() != self.rows {
            return Err(ArithError::DimensionMismatch {
                left: format!("vector of length {}", v.len()),
                right: format!("{}x{}", self.rows, self.cols),
            });
        }
        let mut out = vec![S::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *slot = slot.add_ref(&vi.mul_ref(a));
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diag(blocks: &[Matrix<S>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows;
        }
        out
    }

    /// Diagonal block `index` of size `size`.
    pub fn block(&self, index: usize, size: usize) -> Self {
        let off = index * size;
        let mut out = Self::zeros(size, size);
        for i in 0..size {
            for j in 0..size {
                out[(i, j)] = self[(off + i, off + j)].clone();
            }
        }
        out
    }

    /// Determinant: cofactor expansion up to 3x3, Bareiss elimination above.
    pub fn det(&self) -> Result<S, ArithError> {
        if !self.is_square() {
            return Err(ArithError::NotSquare(self.rows, self.cols));
        }
        let m = |i, j| &self[(i, j)];
        Ok(match self.rows {
            0 => S::one(),
            1 => m(0, 0).clone(),
            2 => m(0, 0).mul_ref(m(1, 1)).sub_ref(&m(0, 1).mul_ref(m(1, 0))),
            3 => {
                let minor = |a: usize, b: usize, c: usize, d: usize| {
                    m(1, a).mul_ref(m(2, b)).sub_ref(&m(1, c).mul_ref(m(2, d)))
                };
                m(0, 0)
                    .mul_ref(&minor(1, 2, 2, 1))
                    .sub_ref(&m(0, 1).mul_ref(&minor(0, 2, 2, 0)))
                    .add_ref(&m(0, 2).mul_ref(&minor(0, 1, 1, 0)))
            }
            _ => self.bareiss_det(),
        })
    }

    fn bareiss_det(&self) -> S {
        let n = self.rows;
        let mut a = self.to_rows();
        let mut prev = S::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return S::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = a[i][j]
                        .mul_ref(&a[k][k])
                        .sub_ref(&a[i][k].mul_ref(&a[k][j]));
                    a[i][j] = t.div_exact(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            d.neg_ref()
        } else {
            d
        }
    }

    /// Injective byte encoding of the matrix, used as a deduplication key.
    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.data.len() * 8);
        out.extend_from_slice(&(self.rows as u32).to_le_bytes());
        out.extend_from_slice(&(self.cols as u32).to_le_bytes());
        for x in &self.data {
            x.write_key(&mut out);
        }
        out
    }
}

impl<S: Field> Matrix<S> {
    /// Exact inverse: adjugate formula up to 3x3, fraction-free
    /// Gauss-Jordan elimination above.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        if !self.is_square() {
            return Err(ArithError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n <= 3 {
            let d = self.det()?;
            let dinv = d.inv().ok_or(ArithError::Singular)?;
            return Ok(self.adjugate().scale(&dinv));
        }
        self.gauss_jordan_inverse()
    }

    fn adjugate(&self) -> Self {
        let n = self.rows;
        match n {
            0 => Self::identity(0),
            1 => Self::identity(1),
            2 => {
                let m = |i, j| self[(i, j)].clone();
                Matrix {
                    rows: 2,
                    cols: 2,
                    data: vec![m(1, 1), m(0, 1).neg_ref(), m(1, 0).neg_ref(), m(0, 0)],
                }
            }
            _ => {
                let mut adj = Self::zeros(3, 3);
                for i in 0..3 {
                    for j in 0..3 {
                        let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
                        let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
                        let minor = self[(r[0], c[0])]
                            .mul_ref(&self[(r[1], c[1])])
                            .sub_ref(&self[(r[0], c[1])].mul_ref(&self[(r[1], c[0])]));
                        adj[(j, i)] = if (i + j) % 2 == 0 {
                            minor
                        } else {
                            minor.neg_ref()
                        };
                    }
                }
                adj
            }
        }
    }

    fn gauss_jordan_inverse(&self) -> Result<Self, ArithError> {
        let n = self.rows;
        let mut a: Vec<Vec<S>> = self
            .to_rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
                row
            })
            .collect();
        let mut prev = S::one();
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&r| !a[r][k].is_zero())
                .ok_or(ArithError::Singular)?;
            a.swap(k, pivot_row);
            let pivot = a[k][k].clone();
            let krow = a[k].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for (x, y) in row.iter_mut().zip(&krow) {
                    *x = x
                        .mul_ref(&pivot)
                        .sub_ref(&factor.mul_ref(y))
                        .div_exact(&prev);
                }
            }
            prev = pivot;
        }
        // Left half is now diag(a[i][i]); divide through.
        let mut out = Self::zeros(n, n);
        for (i, row) in a.iter().enumerate() {
            let d = row[i].inv().ok_or(ArithError::Singular)?;
            for j in 0..n {
                out[(i, j)] = row[n + j].mul_ref(&d);
            }
        }
        Ok(out)
    }
}

pub fn mat_mul<S: Ring>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>, ArithError> {
    a.mul(b)
}

impl Matrix<Integer> {
    /// Inverse over the integers; fails unless the determinant is a unit.
    pub fn unimodular_inverse(&self) -> Result<Self, ArithError> {
        let inv = self.promote::<Rational>().inverse()?;
        if inv.data.iter().any(|x| !x.is_integer()) {
            return Err(ArithError::NotUnimodular);
        }
        Ok(inv.map(|x| x.to_integer()))
    }
}

pub fn mat_inv<S: Field>(a: &Matrix<S>) -> Result<Matrix<S>, ArithError> {
    a.inverse()
}

pub fn det<S: Ring>(a: &Matrix<S>) -> Result<S, ArithError> {
    a.det()
}
