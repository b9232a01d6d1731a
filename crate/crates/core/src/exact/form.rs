use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{ExactMatrix, Rational, Subspace};
use crate::Error;

/// A bilinear form given by its Gram matrix. No symmetry is assumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    gram: ExactMatrix,
}

impl BilinearForm {
    pub fn new(gram: ExactMatrix) -> Result<Self, Error> {
        if !gram.is_square() {
            return Err(Error::Shape(format!("Gram matrix must be square, got {:?}", gram.shape())));
        }
        Ok(Self { gram })
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let a = ExactMatrix::row(a.to_vec());
        let b = ExactMatrix::column(b.to_vec());
        a.mul(&self.gram).mul(&b).as_scalar().clone()
    }

    pub fn det(&self) -> Rational {
        self.gram.det()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    /// Gram matrix of the form on the stored basis of `v`.
    pub fn restrict(&self, v: &Subspace) -> Result<Self, Error> {
        if v.ambient_dim() != self.dim() {
            return Err(Error::Shape(format!(
                "form on Q^{} restricted to a subspace of Q^{}",
                self.dim(),
                v.ambient_dim()
            )));
        }
        let b = v.basis();
        Ok(Self { gram: b.transpose().mul(&self.gram).mul(b) })
    }

    /// `{x : κ(v, x) = 0 for all v ∈ V}`.
    pub fn right_orthogonal(&self, v: &Subspace) -> Subspace {
        if v.is_zero() {
            return Subspace::full(self.dim());
        }
        Subspace::kernel(&v.basis().transpose().mul(&self.gram))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn restrict_to_full_space_is_identity_operation() {
        let g = ExactMatrix::from_i64(&[&[0, 1], &[1, 3]]);
        let k = BilinearForm::new(g.clone()).unwrap();
        assert_eq!(k.restrict(&Subspace::full(2)).unwrap().gram(), &g);
    }

    #[test]
    fn degenerate_detection() {
        let k = BilinearForm::new(ExactMatrix::from_i64(&[&[1, 1], &[1, 1]])).unwrap();
        assert!(!k.is_nondegenerate());
        assert_eq!(k.eval(&[int(1), int(0)], &[int(0), int(1)]), int(1));
        assert!(BilinearForm::new(ExactMatrix::zeros(2, 3)).is_err());
    }
}
