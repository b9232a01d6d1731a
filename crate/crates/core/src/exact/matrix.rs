use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, Rational};
use crate::Error;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(c: Rational) -> Self {
        Self { rows: 1, cols: 1, data: vec![c] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// A single column.
    pub fn column(v: Vec<Rational>) -> Self {
        let n = v.len();
        Self::from_vec(n, 1, v)
    }

    /// A single row.
    pub fn row(v: Vec<Rational>) -> Self {
        let n = v.len();
        Self::from_vec(1, n, v)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(n_rows: usize, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(n_rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n_rows);
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn col_matrix(&self, j: usize) -> Self {
        Self::column(self.col_vec(j))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    /// Entry of a 1×1 matrix.
    pub fn as_scalar(&self) -> &Rational {
        assert_eq!(self.shape(), (1, 1), "not a scalar");
        &self.data[0]
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

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in add");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sub");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Matrix product `self · rhs`, skipping zero entries.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch in mul: {:?} · {:?}",
            self.shape(),
            rhs.shape()
        );
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (j, b) in row.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; index `(i, j)` of the product space is `i * dim_rhs + j`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = &self[(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = &rhs[(i2, j2)];
                        if !b.is_zero() {
                            out[(i1 * rhs.rows + i2, j1 * rhs.cols + j2)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Computes `(I_left ⊗ f ⊗ I_right) · x` without materialising the Kronecker product.
    pub fn whisker(left: usize, f: &Self, right: usize, x: &Self) -> Self {
        assert_eq!(
            x.rows,
            left * f.cols * right,
            "shape mismatch in whisker: {}⊗{:?}⊗{} against {:?}",
            left,
            f.shape(),
            right,
            x.shape()
        );
        let out_rows = left * f.rows * right;
        let mut out = Self::zeros(out_rows, x.cols);
        for l in 0..left {
            for a in 0..f.rows {
                for b in 0..f.cols {
                    let c = &f[(a, b)];
                    if c.is_zero() {
                        continue;
                    }
                    for r in 0..right {
                        let src = (l * f.cols + b) * right + r;
                        let dst = (l * f.rows + a) * right + r;
                        for col in 0..x.cols {
                            let v = &x.data[src * x.cols + col];
                            if !v.is_zero() {
                                out.data[dst * x.cols + col] += c * v;
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "row mismatch in hstack");
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Self { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Sub-matrix made of the listed columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out[(i, k)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Sub-matrix made of the listed rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        Self { rows: rows.len(), cols: self.cols, data }
    }

    /// Row-major flattening into a column vector.
    pub fn flatten(&self) -> Vec<Rational> {
        self.data.clone()
    }

    /// Reinterprets the row-major entries under a new shape.
    pub fn reshape(&self, rows: usize, cols: usize) -> Self {
        Self::from_vec(rows, cols, self.data.clone())
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Reduced row-echelon form by exact Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let v = &m.data[row * m.cols + j] * &inv;
                m.data[row * m.cols + j] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let delta = &factor * &m.data[row * m.cols + j];
                    if !delta.is_zero() {
                        m.data[r * m.cols + j] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { rank: pivots.len(), reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Determinant by fraction elimination.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &pivot;
                for j in col..n {
                    let delta = &factor * &m.data[col * n + j];
                    m.data[r * n + j] -= delta;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::Shape(format!("cannot invert a {:?} matrix", self.shape())));
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n)).rref();
        if aug.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) || aug.rank < n {
            return Err(Error::Singular);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(aug.reduced.select_cols(&cols).select_rows(&(0..n).collect::<Vec<_>>()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Serialised as a list of rows of `"p/q"` strings.
impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Self::from_rows(parsed))
    }
}

/// One tensor layer `I_left ⊗ f ⊗ I_right`.
#[derive(Clone, Copy, Debug)]
pub struct Whisker<'a> {
    pub left: usize,
    pub f: &'a ExactMatrix,
    pub right: usize,
}

impl<'a> Whisker<'a> {
    pub fn new(left: usize, f: &'a ExactMatrix, right: usize) -> Self {
        Self { left, f, right }
    }

    fn out_dim(&self) -> usize {
        self.left * self.f.rows() * self.right
    }
}

/// A column as sorted `(row, value)` pairs with nonzero values.
type SparseCol = Vec<(usize, Rational)>;

impl ExactMatrix {
    fn sparse_col(&self, j: usize) -> SparseCol {
        (0..self.rows)
            .filter_map(|i| {
                let v = &self.data[i * self.cols + j];
                (!v.is_zero()).then(|| (i, v.clone()))
            })
            .collect()
    }

    /// Pushes the columns of `self` through the layers, first layer first.
    ///
    /// Columns travel independently and sparsely, so wide intermediate tensor
    /// powers are never held as dense matrices.
    pub fn through(&self, layers: &[Whisker<'_>]) -> ExactMatrix {
        let cols: Vec<SparseCol> = (0..self.cols).map(|j| self.sparse_col(j)).collect();
        Self::through_sparse(self.rows, cols, layers)
    }

    /// The composite of the layers as a matrix, first layer applied first.
    pub fn chain(input_dim: usize, layers: &[Whisker<'_>]) -> ExactMatrix {
        let cols = (0..input_dim).map(|j| vec![(j, Rational::one())]).collect();
        Self::through_sparse(input_dim, cols, layers)
    }

    fn through_sparse(rows: usize, cols: Vec<SparseCol>, layers: &[Whisker<'_>]) -> ExactMatrix {
        use rayon::prelude::*;
        let mut dim = rows;
        for l in layers {
            assert_eq!(
                dim,
                l.left * l.f.cols * l.right,
                "shape mismatch in through: {}⊗{:?}⊗{} against dimension {dim}",
                l.left,
                l.f.shape(),
                l.right
            );
            dim = l.out_dim();
        }
        let f_cols: Vec<Vec<SparseCol>> = layers.iter().map(|l| (0..l.f.cols).map(|k| l.f.sparse_col(k)).collect()).collect();
        let apply = |col: SparseCol| -> SparseCol {
            layers.iter().zip(&f_cols).fold(col, |x, (l, fc)| {
                let mut acc: std::collections::BTreeMap<usize, Rational> = std::collections::BTreeMap::new();
                for (idx, v) in &x {
                    let (outer, r) = (idx / l.right, idx % l.right);
                    let (a, k) = (outer / l.f.cols, outer % l.f.cols);
                    for (i, c) in &fc[k] {
                        *acc.entry((a * l.f.rows + i) * l.right + r).or_insert_with(Rational::zero) += c * v;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
        };
        let results: Vec<SparseCol> = cols.into_par_iter().map(apply).collect();
        let mut out = Self::zeros(dim, results.len());
        for (j, col) in results.into_iter().enumerate() {
            for (i, v) in col {
                out[(i, j)] = v;
            }
        }
        out
    }
}

/// `a · x = b`, one solution with free variables set to zero.
pub(crate) fn solve(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix, Error> {
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!(
            "solve: {} equations but right-hand side has {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let aug = a.hstack(b).rref();
    if aug.pivots.iter().any(|&p| p >= n) {
        return Err(Error::NoSolution);
    }
    let mut x = ExactMatrix::zeros(n, b.cols());
    for (r, &p) in aug.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x[(p, j)] = aug.reduced[(r, n + j)].clone();
        }
    }
    Ok(x)
}

impl ExactMatrix {
    /// One solution of `self · x = b` (free variables zero), or [`Error::NoSolution`].
    pub fn solve(&self, b: &ExactMatrix) -> Result<ExactMatrix, Error> {
        solve(self, b)
    }
}
