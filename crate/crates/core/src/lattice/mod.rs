//! Exact integer linear algebra over arbitrary-precision integers.

mod covector;
mod snf;
mod sparse;

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use covector::Covector;
pub use snf::{invariant_factors, smith_normal_form, SnfDecomposition};
pub use sparse::SparseMatrix;

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Rows must share one length; `cols` disambiguates the zero-row case.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix row {i}");
            for (j, x) in r.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors of length `n`.
    pub fn from_columns(columns: &[Vec<BigInt>], n: usize) -> Self {
        let mut m = Self::zeros(n, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), n, "column {j} has wrong length");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v.div_floor(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Inverse of a unimodular matrix, from its Smith decomposition
    /// (`U·A·V = I` gives `A⁻¹ = V·U`).
    pub fn unimodular_inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let snf = smith_normal_form(self);
        if snf.d != Self::identity(self.rows) {
            return None;
        }
        Some(&snf.v * &snf.u)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let w = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> =
                (0..self.cols).map(|j| format!("{:>w$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// True iff there are exactly `n` vectors in `ℤⁿ` and they form a basis.
pub fn is_unimodular_basis(vectors: &[Vec<BigInt>], n: usize) -> bool {
    if vectors.len() != n || vectors.iter().any(|v| v.len() != n) {
        return false;
    }
    IntegerMatrix::from_rows(vectors, n).determinant().abs().is_one()
}

/// A lattice basis of `span_ℤ(vectors) ∩ Ker p`.
pub fn intersect_with_hyperplane(vectors: &[Vec<BigInt>], p: &Covector) -> Result<Vec<Vec<BigInt>>> {
    let n = p.len();
    for v in vectors {
        if v.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: v.len() });
        }
    }
    let k = vectors.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    // x ∈ ℤᵏ with p·(Σ xⱼ vⱼ) = 0 form the kernel of the 1×k row r.
    let r: Vec<BigInt> = vectors.iter().map(|v| p.pair(v)).collect();
    let kernel: Vec<Vec<BigInt>> = if r.iter().all(Zero::is_zero) {
        (0..k).map(|j| IntegerMatrix::identity(k).column(j)).collect()
    } else {
        let snf = smith_normal_form(&IntegerMatrix::from_rows(&[r], k));
        (1..k).map(|j| snf.v.column(j)).collect()
    };
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    let generators = &IntegerMatrix::from_columns(vectors, n) * &IntegerMatrix::from_columns(&kernel, k);
    Ok(column_lattice_basis(&generators))
}

/// A basis of the lattice spanned by the columns of `m`: with `U·M·V = D`,
/// the columns of `M·V = U⁻¹·D` span the same lattice.
pub fn column_lattice_basis(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let u_inv = snf.u.unimodular_inverse().expect("U is unimodular");
    snf.d
        .diagonal()
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| u_inv.column(i).into_iter().map(|x| x * d).collect())
        .collect()
}

/// Whether `Ker p / span(sub_basis)` is torsion-free, i.e. the span is
/// saturated in the hyperplane.
pub fn torsion_free_quotient(sub_basis: &[Vec<BigInt>], p: &Covector) -> Result<bool> {
    if sub_basis.is_empty() {
        return Ok(true);
    }
    let coords = sub_basis
        .iter()
        .map(|v| p.hyperplane_coordinates(v))
        .collect::<Result<Vec<_>>>()?;
    let m = IntegerMatrix::from_columns(&coords, p.len() - 1);
    Ok(invariant_factors(&m).iter().all(One::is_one))
}

/// Rank via Smith normal form.
pub fn rank(m: &IntegerMatrix) -> usize {
    invariant_factors(m).len()
}
