//! sparse matrices and canonical subspaces over an exact scalar.
//!
//! matrices act on coordinate columns from the left, so `a.mul(&b)` is the
//! operator "apply `b`, then `a`". subspaces are kept in reduced row echelon
//! form with pivot columns strictly increasing, which makes equality of
//! subspaces plain structural equality.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace is not contained in the reference subspace")]
    NotContained,
}

/// sparse rows x cols matrix; absent entries are zero and stored zeros are
/// never kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<S> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), S>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, S)>,
    ) -> Result<Self, LinalgError> {
        let mut m = Self::zero(rows, cols);
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "entry ({r}, {c}) outside {rows} x {cols}"
                )));
            }
            if m.entries.contains_key(&(r, c)) {
                return Err(LinalgError::DimensionMismatch(format!(
                    "duplicate entry at ({r}, {c})"
                )));
            }
            m.set(r, c, v);
        }
        Ok(m)
    }

    pub fn from_dense(data: &[Vec<S>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let mut m = Self::zero(rows, cols);
        for (r, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone());
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

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// set entry, erasing it when the value is zero.
    pub fn set(&mut self, r: usize, c: usize, v: S) {
        assert!(r < self.rows && c < self.cols, "entry outside matrix");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(S::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            m.set(c, r, v.clone());
        }
        m
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut m = Self::zero(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            m.set(r, c, v.clone() * k.clone());
        }
        m
    }

    pub fn neg(&self) -> Self {
        self.scale(&(S::zero() - S::one()))
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "add {}x{} to {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = self.clone();
        for (r, c, v) in other.entries() {
            let cur = m.get(r, c);
            m.set(r, c, cur + v.clone());
        }
        Ok(m)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.add(&other.neg())
    }

    /// matrix product `self * other` ("apply other, then self").
    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        // group right factor by row for sparse accumulation
        let mut by_row: BTreeMap<usize, Vec<(usize, &S)>> = BTreeMap::new();
        for (r, c, v) in other.entries() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut m = Self::zero(self.rows, other.cols);
        for (r, k, a) in self.entries() {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    let cur = m.get(r, c);
                    m.set(r, c, cur + a.clone() * b.clone());
                }
            }
        }
        Ok(m)
    }

    /// matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![S::zero(); self.rows];
        for (r, c, a) in self.entries() {
            if !v[c].is_zero() {
                out[r] = out[r].clone() + a.clone() * v[c].clone();
            }
        }
        Ok(out)
    }

    /// submatrix on the given row and column index lists (repeats allowed).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zero(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c));
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        let mut d = vec![vec![S::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            d[r][c] = v.clone();
        }
        d
    }

    pub fn rank(&self) -> usize {
        // drop empty rows and columns first; elimination cost depends only
        // on the occupied block
        let mut row_used = vec![false; self.rows];
        let mut col_used = vec![false; self.cols];
        for (r, c, _) in self.entries() {
            row_used[r] = true;
            col_used[c] = true;
        }
        let rows: Vec<usize> = (0..self.rows).filter(|&r| row_used[r]).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| col_used[c]).collect();
        if rows.is_empty() {
            return 0;
        }
        let mut d = self.submatrix(&rows, &cols).to_dense();
        rref_in_place(&mut d).len()
    }

    /// null space `{v : self v = 0}` as a canonical subspace of the column
    /// coordinate space.
    pub fn kernel(&self) -> Subspace<S> {
        let mut d = self.to_dense();
        let pivots = rref_in_place(&mut d);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = S::zero() - d[row][free].clone();
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.cols, basis)
    }

    /// column space as a canonical subspace of the row coordinate space.
    pub fn image(&self) -> Subspace<S> {
        let cols: Vec<Vec<S>> = (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.get(r, c)).collect())
            .collect();
        Subspace::from_spanning(self.rows, cols)
    }
}

impl<S: Scalar> fmt::Display for SparseMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// reduce `rows` to reduced row echelon form in place; returns the pivot
/// column of each nonzero row (in order). zero rows sink to the bottom.
pub(crate) fn rref_in_place<S: Scalar>(rows: &mut Vec<Vec<S>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        // find a pivot in this column at or below next_row
        let Some(piv) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, piv);
        let lead = rows[next_row][col].clone();
        for x in rows[next_row].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = factor.clone() * rows[next_row][c].clone();
                    rows[r][c] = rows[r][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    pivots
}

/// linear subspace of a coordinate space, stored as a reduced row echelon
/// basis. two subspaces are equal iff their stored bases are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![S::zero(); ambient];
                v[i] = S::one();
                v
            })
            .collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    /// canonicalize a spanning set.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<S>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        let mut rows = vectors;
        let pivots = rref_in_place(&mut rows);
        Subspace { ambient, basis: rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// coordinates without a pivot; the images of the corresponding standard
    /// basis vectors form a basis of the quotient by this subspace.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// residue of `v` after subtracting its projection along the basis; zero
    /// iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for c in 0..self.ambient {
                    let delta = factor.clone() * self.basis[row][c].clone();
                    w[c] = w[c].clone() - delta;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(S::is_zero)
    }

    /// expansion coefficients of `v` in the stored basis, if `v` lies here.
    pub fn coords_of(&self, v: &[S]) -> Option<Vec<S>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Self::from_spanning(self.ambient, vectors))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        // v in both spaces: v = sum x_i a_i = sum y_j b_j; solve for (x, -y)
        // in the kernel of the column-stacked generator matrix.
        let k = self.dim();
        let l = other.dim();
        let mut m = SparseMatrix::zero(self.ambient, k + l);
        for (i, v) in self.basis.iter().enumerate() {
            for (c, x) in v.iter().enumerate() {
                m.set(c, i, x.clone());
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for (c, x) in v.iter().enumerate() {
                m.set(c, k + j, S::zero() - x.clone());
            }
        }
        let null = m.kernel();
        let vectors = null
            .basis()
            .iter()
            .map(|coef| {
                let mut v = vec![S::zero(); self.ambient];
                for (i, b) in self.basis.iter().enumerate() {
                    if !coef[i].is_zero() {
                        for c in 0..self.ambient {
                            let delta = coef[i].clone() * b[c].clone();
                            v[c] = v[c].clone() + delta;
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Self::from_spanning(self.ambient, vectors))
    }

    /// dimension of `other / self`; errors unless `self <= other`.
    pub fn quotient_dim_in(&self, other: &Self) -> Result<usize, LinalgError> {
        self.check_ambient(other)?;
        if !self.leq(other) {
            return Err(LinalgError::NotContained);
        }
        Ok(other.dim() - self.dim())
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}
