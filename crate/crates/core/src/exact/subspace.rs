use serde::{Deserialize, Serialize};

use super::{ExactMatrix, Rational};
use crate::Error;

/// A subspace of `Q^n`, stored as the columns of a canonical basis matrix.
///
/// The basis is the transpose of the reduced row-echelon form of the spanning
/// set, so two subspaces are equal as sets exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: ExactMatrix,
}

impl Subspace {
    /// Span of the columns of `m`.
    pub fn span(m: &ExactMatrix) -> Self {
        let n = m.rows();
        let r = m.transpose().rref();
        let rows: Vec<usize> = (0..r.rank).collect();
        let basis = r.reduced.select_rows(&rows).transpose();
        Self { ambient_dim: n, basis: if r.rank == 0 { ExactMatrix::zeros(n, 0) } else { basis } }
    }

    pub fn span_vectors(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        Self::span(&ExactMatrix::from_columns(ambient_dim, vectors))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: ExactMatrix::zeros(ambient_dim, 0) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: ExactMatrix::identity(ambient_dim) }
    }

    /// `{x : m·x = 0}`.
    pub fn kernel(m: &ExactMatrix) -> Self {
        let n = m.cols();
        let r = m.rref();
        let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
        let vectors: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::default(); n];
                v[f] = super::one();
                for (row, &p) in r.pivots.iter().enumerate() {
                    v[p] = -r.reduced[(row, f)].clone();
                }
                v
            })
            .collect();
        Self::span_vectors(n, &vectors)
    }

    /// Column space of `m`.
    pub fn image(m: &ExactMatrix) -> Self {
        Self::span(m)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|j| self.basis.col_vec(j)).collect()
    }

    /// Row index of the leading entry of each basis column. Selecting these
    /// rows is a left inverse of the basis.
    pub fn pivot_rows(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|j| (0..self.ambient_dim).find(|&i| !num_traits::Zero::is_zero(&self.basis[(i, j)])).expect("nonzero column"))
            .collect()
    }

    /// Selection of the pivot rows; `retraction() · basis() = I`.
    pub fn retraction(&self) -> ExactMatrix {
        ExactMatrix::identity(self.ambient_dim).select_rows(&self.pivot_rows())
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn check_ambient(&self, other: &Self) -> Result<(), Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Shape(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.basis.solve(&ExactMatrix::column(v.to_vec())).is_ok()
    }

    pub fn contains(&self, other: &Self) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(self.sum(other)?.dim() == self.dim())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        Ok(Self::span(&self.basis.hstack(&other.basis)))
    }

    /// Intersection via the kernel of `[A | -B]`.
    pub fn intersect(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        let k = Subspace::kernel(&self.basis.hstack(&other.basis.neg()));
        if k.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        let coeffs: Vec<usize> = (0..self.dim()).collect();
        let top = k.basis.select_rows(&coeffs);
        Ok(Self::span(&self.basis.mul(&top)))
    }

    /// Image of the subspace under a linear map.
    pub fn apply(&self, map: &ExactMatrix) -> Result<Self, Error> {
        if map.cols() != self.ambient_dim {
            return Err(Error::Shape(format!(
                "map with {} columns applied to a subspace of Q^{}",
                map.cols(),
                self.ambient_dim
            )));
        }
        if self.is_zero() {
            return Ok(Self::zero(map.rows()));
        }
        Ok(Self::span(&map.mul(&self.basis)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![int(0); n];
        v[i] = int(1);
        v
    }

    #[test]
    fn kernel_examples() {
        assert!(Subspace::kernel(&ExactMatrix::identity(3)).is_zero());
        assert!(Subspace::kernel(&ExactMatrix::zeros(3, 3)).is_full());
        let k = Subspace::kernel(&ExactMatrix::from_i64(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, Subspace::span_vectors(2, &[vec![int(1), int(-1)]]));
    }

    #[test]
    fn canonical_form_identifies_equal_spans() {
        let a = Subspace::span_vectors(3, &[vec![int(1), int(1), int(0)], vec![int(0), int(1), int(0)]]);
        let b = Subspace::span_vectors(3, &[vec![int(2), int(0), int(0)], vec![int(3), int(5), int(0)]]);
        assert_eq!(a, b);
    }

    #[test]
    fn coordinate_lines() {
        let a = Subspace::span_vectors(2, &[e(2, 0)]);
        let b = Subspace::span_vectors(2, &[e(2, 1)]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.sum(&b).unwrap().is_full());
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.sum(&Subspace::zero(2)).unwrap(), a);
        assert!(a.intersect(&Subspace::zero(3)).is_err());
    }
}
