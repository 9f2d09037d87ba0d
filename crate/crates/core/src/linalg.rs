//! Dense exact linear algebra: rank, kernels, span membership.

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Rank by fraction-free (Bareiss) elimination on denominator-cleared rows.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<F>> = self.row_vectors();
        for r in a.iter_mut() {
            F::clear_denominators(r);
        }
        bareiss(&mut a, self.cols).0
    }

    pub fn determinant(&self) -> Result<F> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        if self.rows == 0 {
            return Ok(F::one());
        }
        let mut a = self.row_vectors();
        let (rank, negate) = bareiss(&mut a, self.cols);
        if rank < self.rows {
            return Ok(F::zero());
        }
        let d = a[self.rows - 1][self.cols - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m);
        (m, pivots)
    }

    /// Canonical basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            basis.push(v);
        }
        canonical_basis(&basis)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let pivots = rref_in_place(&mut aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }
}

/// Bareiss elimination in place; returns the rank and whether an odd number
/// of row swaps happened.
fn bareiss<F: Field>(a: &mut [Vec<F>], cols: usize) -> (usize, bool) {
    let rows = a.len();
    let mut prev = F::one();
    let mut r = 0;
    let mut negate = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            negate = !negate;
        }
        let pivot = a[r][c].clone();
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(pivot_row).skip(c + 1).take(cols - c - 1) {
                *x = (pivot.clone() * x.clone() - factor.clone() * p.clone()).exact_div(&prev);
            }
            row[c] = F::zero();
        }
        // rows above the pivot row keep their entries; only the trailing block
        // is carried forward
        prev = pivot;
        r += 1;
    }
    (r, negate)
}

fn rref_in_place<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = F::one() / m.get(r, c).clone();
        for j in c..cols {
            let v = m.get(r, j).clone() * inv.clone();
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = m.get(i, j).clone() - factor.clone() * m.get(r, j).clone();
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    m.rank()
}

pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    m.kernel_basis()
}

/// Nonzero rows of the reduced row echelon form of the given vectors; equal
/// spans give equal outputs.
pub fn canonical_basis<F: Field>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

pub fn same_span<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    canonical_basis(a) == canonical_basis(b)
}

/// Coordinates of `v` in terms of `basis` if `v` lies in the span; free
/// coordinates are set to zero when the basis is dependent.
pub fn in_span<F: Field>(v: &[F], basis: &[Vec<F>]) -> Result<Option<Vec<F>>> {
    for b in basis {
        if b.len() != v.len() {
            return Err(Error::DimensionMismatch { expected: v.len(), found: b.len() });
        }
    }
    let n = v.len();
    let k = basis.len();
    let mut aug = Matrix::zeros(n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        for (i, x) in b.iter().enumerate() {
            aug.set(i, j, x.clone());
        }
    }
    for (i, x) in v.iter().enumerate() {
        aug.set(i, k, x.clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coords = vec![F::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        coords[p] = r.get(row, k).clone();
    }
    Ok(Some(coords))
}
