use super::FrobeniusObject;
use crate::exact::{ExactMatrix, Whisker};

/// `a ∗ b = m∘(a⊗b)∘δ`.
pub fn convolution(f: &FrobeniusObject, a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let n = f.dim;
    f.delta
        .through(&[Whisker::new(n, b, 1), Whisker::new(1, a, n), Whisker::new(1, &f.m, 1)])
}

/// `F(a) = (id⊗m)∘(id⊗a⊗id)∘(δ⊗id)`, an endomorphism of `X⊗X`.
pub fn fourier(f: &FrobeniusObject, a: &ExactMatrix) -> ExactMatrix {
    let n = f.dim;
    ExactMatrix::chain(
        n * n,
        &[Whisker::new(1, &f.delta, n), Whisker::new(n, a, n), Whisker::new(n, &f.m, 1)],
    )
}

/// `F⁻¹(x) = (ε⊗id)∘x∘(id⊗e)`, a left inverse of [`fourier`].
pub fn fourier_inverse(f: &FrobeniusObject, x: &ExactMatrix) -> ExactMatrix {
    let n = f.dim;
    let id = ExactMatrix::identity(n);
    id.kron(&f.e).through(&[Whisker::new(1, x, 1), Whisker::new(1, &f.eps, n)])
}
