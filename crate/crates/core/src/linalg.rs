//! Dense exact linear algebra over a [`Field`].
//!
//! Gauss-Jordan elimination is used for kernels, solutions and inverses; over the
//! rationals, rank and determinant go through fraction-free Bareiss elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::field::{Field, Rationals};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("entry count {got} does not match {rows}x{cols}")]
    BadLength { rows: usize, cols: usize, got: usize },
}

/// Dense row-major matrix with entries in `K`.
#[derive(Clone, PartialEq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|a| self.field.format(a)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<K: Field> Matrix<K> {
    pub fn new(field: K, rows: usize, cols: usize, data: Vec<K::Elem>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::BadLength { rows, cols, got: data.len() });
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &K, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Builds a matrix from integer rows (reduced into the field).
    pub fn from_i64_rows(field: &K, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &K, nrows: usize, cols: &[Vec<K::Elem>]) -> Self {
        Self::from_fn(field, nrows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn random<R: Rng + ?Sized>(field: &K, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(field, rows, cols, |_, _| field.random(rng))
    }

    /// A uniformly random invertible matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(field: &K, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn field(&self) -> &K {
        &self.field
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
    pub fn entries(&self) -> &[K::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &K::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<K::Elem>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(&self.field, self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o = f.mul_add(a, b, o);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.mul_add(a, b, &acc))
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &K::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &K::Elem, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(s, b, a);
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> K::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut m = Self::zeros(f, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    /// Columns `start..end`.
    pub fn col_range(&self, start: usize, end: usize) -> Self {
        let idx: Vec<usize> = (start..end).collect();
        self.select_cols(&idx)
    }

    /// Sub-block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(&self.field, r1 - r0, c1 - c0, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| !f.is_zero(&self.data[r * cols + c])) else {
                continue;
            };
            if sel != pr {
                for j in 0..cols {
                    self.data.swap(sel * cols + j, pr * cols + j);
                }
            }
            let inv = f.inv(&self.data[pr * cols + c]).expect("nonzero pivot");
            for j in c..cols {
                self.data[pr * cols + j] = f.mul(&self.data[pr * cols + j], &inv);
            }
            let (before, rest) = self.data.split_at_mut(pr * cols);
            let (prow, after) = rest.split_at_mut(cols);
            for row in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let factor = f.neg(&row[c]);
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..cols {
                    row[j] = f.mul_add(&factor, &prow[j], &row[j]);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.field.clone().rank_of(self)
    }

    /// Basis of the right kernel `{v : self * v = 0}` as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<K::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Self {
        Self::from_columns(&self.field, self.cols, &self.kernel_basis())
    }

    /// Indices of a maximal set of linearly independent columns (leftmost first).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().1
    }

    /// Basis of the column space, taken from the original columns.
    pub fn column_space(&self) -> Self {
        self.select_cols(&self.independent_columns())
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.col_range(n, 2 * n))
    }

    pub fn det(&self) -> Result<K::Elem, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.field.clone().det_of(self))
    }

    pub fn check_same_field(&self, other: &Self) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(
                self.field.spec().to_string(),
                other.field.spec().to_string(),
            ));
        }
        Ok(())
    }

    /// Minimal polynomial, monic, coefficients low-to-high.
    pub fn min_poly(&self) -> Result<Vec<K::Elem>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        // first linear dependency among vec(I), vec(A), vec(A^2), ...
        let mut ech = Echelon::new(f, n * n);
        let mut power = Self::identity(f, n);
        for k in 0..=n {
            if let Some(combo) = ech.dependency(&power.data) {
                // A^k = sum c_i A^i
                let mut poly: Vec<K::Elem> = combo.iter().map(|c| f.neg(c)).collect();
                poly.push(f.one());
                return Ok(poly);
            }
            ech.insert_tracked(power.data.clone());
            if k < n {
                power = power.mul(self);
            }
        }
        unreachable!("Cayley-Hamilton bounds the degree by n")
    }

    /// Whether `self^dim == 0`.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u64).is_zero()
    }
}

/// Right kernel basis of `m`.
pub fn kernel_basis<K: Field>(m: &Matrix<K>) -> Vec<Vec<K::Elem>> {
    m.kernel_basis()
}

/// Solves `a * x = b`; `Ok(None)` when the system is inconsistent.
pub fn solve_linear<K: Field>(a: &Matrix<K>, b: &Matrix<K>) -> Result<Option<Matrix<K>>, LinalgError> {
    if a.rows != b.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "a has {} rows, b has {}",
            a.rows, b.rows
        )));
    }
    a.check_same_field(b)?;
    let f = &a.field;
    let aug = a.hstack(b);
    let (r, pivots) = aug.rref();
    if pivots.iter().any(|&c| c >= a.cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(f, a.cols, b.cols);
    for (i, &pc) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(pc, j, r.get(i, a.cols + j).clone());
        }
    }
    Ok(Some(x))
}

/// Minimal polynomial of a square matrix.
pub fn min_poly<K: Field>(m: &Matrix<K>) -> Result<Vec<K::Elem>, LinalgError> {
    m.min_poly()
}

/// Incrementally built semi-echelon basis of a subspace of `K^n`.
///
/// Each stored row has a pivot entry equal to one, and every later row is zero
/// at the pivots of earlier rows, so reducing a vector row by row in insertion
/// order clears all pivots.
#[derive(Clone, Debug)]
pub struct Echelon<K: Field> {
    field: K,
    n: usize,
    rows: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
    // for each stored row, its expression in the inserted vectors
    combos: Vec<Vec<K::Elem>>,
}

impl<K: Field> Echelon<K> {
    pub fn new(field: &K, n: usize) -> Self {
        Echelon { field: field.clone(), n, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    fn reduce_tracked(&self, v: &[K::Elem]) -> (Vec<K::Elem>, Vec<K::Elem>) {
        let f = &self.field;
        let mut v = v.to_vec();
        let mut combo = vec![f.zero(); self.rows.len()];
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = v[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            let neg = f.neg(&c);
            for j in 0..self.n {
                if !f.is_zero(&row[j]) {
                    v[j] = f.mul_add(&neg, &row[j], &v[j]);
                }
            }
            // v_new = v - c * row_i, row_i = sum combos[i][k] * inserted_k
            for (k, ck) in self.combos[i].iter().enumerate() {
                combo[k] = f.mul_add(&c, ck, &combo[k]);
            }
        }
        (v, combo)
    }

    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            let neg = f.neg(&c);
            for j in 0..self.n {
                if !f.is_zero(&row[j]) {
                    v[j] = f.mul_add(&neg, &row[j], &v[j]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.reduce(v).iter().all(|a| self.field.is_zero(a))
    }

    /// Inserts `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[K::Elem]) -> bool {
        self.insert_tracked(v.to_vec())
    }

    /// Like [`insert`](Self::insert) but also records coordinates so that
    /// [`dependency`](Self::dependency) can express later vectors in terms of
    /// the inserted ones.
    pub fn insert_tracked(&mut self, v: Vec<K::Elem>) -> bool {
        let f = self.field.clone();
        let k = self.rows.len();
        let (mut r, combo) = self.reduce_tracked(&v);
        let Some(p) = r.iter().position(|a| !f.is_zero(a)) else {
            return false;
        };
        let inv = f.inv(&r[p]).unwrap();
        for a in r.iter_mut() {
            *a = f.mul(a, &inv);
        }
        // r_normalized = inv * (v - sum combo_i * inserted_i)
        let mut c: Vec<K::Elem> = combo.iter().map(|a| f.neg(&f.mul(a, &inv))).collect();
        c.push(inv);
        for old in self.combos.iter_mut() {
            old.push(f.zero());
        }
        debug_assert_eq!(c.len(), k + 1);
        self.rows.push(r);
        self.pivots.push(p);
        self.combos.push(c);
        true
    }

    /// If `v` lies in the span of the inserted vectors, its coordinates in them.
    pub fn dependency(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let (r, combo) = self.reduce_tracked(v);
        if r.iter().all(|a| self.field.is_zero(a)) {
            Some(combo)
        } else {
            None
        }
    }
}

pub(crate) fn gauss_det<K: Field>(m: &Matrix<K>) -> K::Elem {
    let f = m.field.clone();
    let n = m.rows;
    let mut a = m.clone();
    let mut det = f.one();
    for c in 0..n {
        let Some(sel) = (c..n).find(|&r| !f.is_zero(a.get(r, c))) else {
            return f.zero();
        };
        if sel != c {
            for j in 0..n {
                a.data.swap(sel * n + j, c * n + j);
            }
            det = f.neg(&det);
        }
        let piv = a.get(c, c).clone();
        det = f.mul(&det, &piv);
        let inv = f.inv(&piv).unwrap();
        for r in c + 1..n {
            let factor = f.neg(&f.mul(a.get(r, c), &inv));
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..n {
                let v = f.mul_add(&factor, &a.data[c * n + j].clone(), a.get(r, j));
                a.set(r, j, v);
            }
        }
    }
    det
}

pub(crate) fn gauss_rank<K: Field>(m: &Matrix<K>) -> usize {
    m.rref().1.len()
}

pub(crate) fn rational_rank(m: &Matrix<Rationals>) -> usize {
    bareiss(&integer_rows(m), m.cols).0
}

pub(crate) fn rational_det(m: &Matrix<Rationals>) -> BigRational {
    // det(m) = det(scaled) / prod(row scales)
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| {
            let lcm = m.row(r).iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
            scale *= &lcm;
            m.row(r)
                .iter()
                .map(|a| (a * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    let (rank, det) = bareiss(&rows, m.cols);
    if rank < m.rows {
        return BigRational::zero();
    }
    BigRational::new(det, scale)
}

fn integer_rows(m: &Matrix<Rationals>) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|r| {
            let lcm = m.row(r).iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
            m.row(r)
                .iter()
                .map(|a| (a * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Fraction-free Bareiss elimination on an integer matrix.
/// Returns the rank and, for square full-rank input, the determinant.
pub fn bareiss(rows: &[Vec<BigInt>], ncols: usize) -> (usize, BigInt) {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(sel) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        if sel != rank {
            a.swap(sel, rank);
            sign = -sign;
        }
        for r in rank + 1..nrows {
            for j in c + 1..ncols {
                let v = (&a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    let det = if rank == nrows && nrows == ncols { sign * prev } else { BigInt::zero() };
    (rank, det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let f = gf(5);
        assert_eq!(Matrix::zeros(&f, 2, 2).kernel_basis().len(), 2);
        assert!(Matrix::identity(&f, 3).kernel_basis().is_empty());
        let f2 = gf(2);
        let m = Matrix::from_i64_rows(&f2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let f = gf(5);
        let b = Matrix::from_i64_rows(&f, &[vec![3, 1], vec![4, 0]]);
        assert_eq!(solve_linear(&Matrix::identity(&f, 2), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve_linear(&Matrix::zeros(&f, 2, 2), &b).unwrap(), None);
        let a = Matrix::from_i64_rows(&f, &[vec![2]]);
        let b = Matrix::from_i64_rows(&f, &[vec![1]]);
        assert_eq!(solve_linear(&a, &b).unwrap().unwrap(), Matrix::from_i64_rows(&f, &[vec![3]]));
        assert!(matches!(
            solve_linear(&a, &Matrix::zeros(&f, 2, 1)),
            Err(LinalgError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn min_poly_examples() {
        let f = gf(5);
        let j = Matrix::from_i64_rows(&f, &[vec![0, 1], vec![0, 0]]);
        assert_eq!(j.min_poly().unwrap(), vec![0, 0, 1]);
        assert_eq!(Matrix::identity(&f, 4).min_poly().unwrap(), vec![4, 1]);
        // companion of t^2 + t + 1 over GF(2)
        let f2 = gf(2);
        let c = Matrix::from_i64_rows(&f2, &[vec![0, 1], vec![1, 1]]);
        assert_eq!(c.min_poly().unwrap(), vec![1, 1, 1]);
        assert!(matches!(
            Matrix::zeros(&f, 2, 3).min_poly(),
            Err(LinalgError::NotSquare { .. })
        ));
    }

    #[test]
    fn rank_nullity_random() {
        let f = gf(7);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let r = rng.gen_range(1..6);
            let c = rng.gen_range(1..6);
            // low-rank products exercise the kernel more
            let k = rng.gen_range(0..4);
            let m = Matrix::random(&f, r, k, &mut rng).mul(&Matrix::random(&f, k, c, &mut rng));
            let ker = m.kernel_basis();
            assert_eq!(m.rank() + ker.len(), c);
            for v in &ker {
                assert!(m.mul_vec(v).iter().all(|a| *a == 0));
            }
        }
    }

    #[test]
    fn rational_bareiss_matches_gauss() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let n = rng.gen_range(1..5);
            let m = Matrix::from_fn(&q, n, n, |_, _| {
                BigRational::new(rng.gen_range(-5..6).into(), rng.gen_range(1..4).into())
            });
            assert_eq!(m.rank(), m.rref().1.len());
            assert_eq!(m.det().unwrap(), gauss_det(&m));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = gf(32003);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = Matrix::random_invertible(&f, 6, &mut rng);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::<Fp>::zeros(&f, 2, 2).inverse().is_none());
    }

    #[test]
    fn echelon_dependency() {
        let f = gf(11);
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(&[1, 2, 3]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[2, 5, 7]));
        let d = e.dependency(&[2, 5, 7]).unwrap();
        assert_eq!(d, vec![2, 1]);
        assert!(e.dependency(&[0, 0, 1]).is_none());
    }
}
