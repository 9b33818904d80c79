//! Dense complex matrices and the handful of operations the determinantal
//! observables need: LU determinants, 2×2 block assembly and Kronecker products.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct ComplexMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<C64>,
}

#[derive(Deserialize)]
struct RawMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<C64>,
}

impl TryFrom<RawMatrix> for ComplexMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        ComplexMatrix::new(raw.n_rows, raw.n_cols, raw.entries)
    }
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries. Entries must be finite.
    pub fn new(n_rows: usize, n_cols: usize, entries: Vec<C64>) -> Result<Self> {
        if entries.len() != n_rows * n_cols {
            return Err(Error::dimension(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                n_rows,
                n_cols
            )));
        }
        if entries.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::domain("matrix entries must be finite"));
        }
        Ok(Self {
            n_rows,
            n_cols,
            entries,
        })
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self {
            n_rows,
            n_cols,
            entries: vec![C64::new(0.0, 0.0); n_rows * n_cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, C64::new(1.0, 0.0))
    }

    /// `c · 1_n`.
    pub fn scalar(n: usize, c: C64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn from_diag(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let d: Vec<C64> = diag.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_diag(&d)
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                entries.push(f(i, j));
            }
        }
        Self {
            n_rows,
            n_cols,
            entries,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.n_rows.min(self.n_cols))
            .map(|i| self[(i, i)])
            .collect()
    }

    pub fn trace(&self) -> C64 {
        self.diagonal().iter().sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n_cols, self.n_rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square()
            && (0..self.n_rows).all(|i| {
                (i..self.n_cols).all(|j| (self[(i, j)] - self[(j, i)].conj()).norm() <= tol)
            })
    }

    /// True when every entry has a zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|c| c.im == 0.0)
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `c · 1 − self`, the argument of a characteristic polynomial.
    pub fn shifted_from(&self, c: C64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::dimension("shift of a non-square matrix"));
        }
        let mut m = self.scale(C64::new(-1.0, 0.0));
        for i in 0..self.n_rows {
            m[(i, i)] += c;
        }
        Ok(m)
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.n_cols != rhs.n_rows {
            return Err(Error::dimension(format!(
                "product of {}x{} and {}x{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        let mut out = Self::zeros(self.n_rows, rhs.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.n_cols {
                    out.entries[i * rhs.n_cols + j] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(C64, C64) -> C64) -> Result<Self> {
        if self.n_rows != rhs.n_rows || self.n_cols != rhs.n_cols {
            return Err(Error::dimension(format!(
                "elementwise op on {}x{} and {}x{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        Ok(Self {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Determinant by LU factorization with partial (row) pivoting.
    pub fn determinant(&self) -> Result<C64> {
        determinant(self)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.entries[i * self.n_cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.entries[i * self.n_cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: Self) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix dimensions must agree")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: Self) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix dimensions must agree")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: Self) -> ComplexMatrix {
        self.matmul(rhs).expect("inner matrix dimensions must agree")
    }
}

/// Determinant of a square matrix via row-pivoted LU.
///
/// A zero pivot column yields an exact zero rather than an error; callers that
/// need invertibility check the result themselves.
pub fn determinant(m: &ComplexMatrix) -> Result<C64> {
    if !m.is_square() {
        return Err(Error::dimension(format!(
            "determinant of a {}x{} matrix",
            m.n_rows, m.n_cols
        )));
    }
    let n = m.n_rows;
    if n == 0 {
        return Ok(C64::new(1.0, 0.0));
    }
    let mut a = m.entries.clone();
    let mut det = C64::new(1.0, 0.0);
    for k in 0..n {
        let (p, pmax) = (k..n)
            .map(|i| (i, a[i * n + k].norm()))
            .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pmax == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let pivot = a[k * n + k];
        det *= pivot;
        let inv = pivot.inv();
        for i in (k + 1)..n {
            let factor = a[i * n + k] * inv;
            if factor == C64::new(0.0, 0.0) {
                continue;
            }
            for j in (k + 1)..n {
                let akj = a[k * n + j];
                a[i * n + j] -= factor * akj;
            }
        }
    }
    Ok(det)
}

/// Assembles `[[a, b], [c, d]]`.
pub fn block2x2(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    c: &ComplexMatrix,
    d: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    if !a.is_square() || !d.is_square() {
        return Err(Error::dimension("diagonal blocks must be square"));
    }
    let (p, q) = (a.n_rows, d.n_rows);
    if b.n_rows != p || b.n_cols != q || c.n_rows != q || c.n_cols != p {
        return Err(Error::dimension(format!(
            "off-diagonal blocks {}x{} and {}x{} do not fit diagonal blocks of size {} and {}",
            b.n_rows, b.n_cols, c.n_rows, c.n_cols, p, q
        )));
    }
    Ok(ComplexMatrix::from_fn(p + q, p + q, |i, j| match (i < p, j < p) {
        (true, true) => a[(i, j)],
        (true, false) => b[(i, j - p)],
        (false, true) => c[(i - p, j)],
        (false, false) => d[(i - p, j - p)],
    }))
}

/// Assembles a square matrix from an `r × r` grid of equally sized square
/// blocks given row by row.
pub fn block_grid(blocks: &[&[&ComplexMatrix]]) -> Result<ComplexMatrix> {
    let r = blocks.len();
    if r == 0 || blocks.iter().any(|row| row.len() != r) {
        return Err(Error::dimension("block grid must be square and non-empty"));
    }
    let n = blocks[0][0].n_rows;
    if blocks
        .iter()
        .flat_map(|row| row.iter())
        .any(|b| b.n_rows != n || b.n_cols != n)
    {
        return Err(Error::dimension("all blocks of a grid must be n x n"));
    }
    Ok(ComplexMatrix::from_fn(r * n, r * n, |i, j| {
        blocks[i / n][j / n][(i % n, j % n)]
    }))
}

/// Kronecker product `a ⊗ b`, row-block ordering.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (br, bc) = (b.n_rows, b.n_cols);
    ComplexMatrix::from_fn(a.n_rows * br, a.n_cols * bc, |i, j| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    })
}
