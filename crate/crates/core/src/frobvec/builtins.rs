//! The three small vector-space fixtures.

use crate::exact::{int, BilinearForm, ExactMatrix, Rational, Subspace};

use super::VecFrobeniusAlgebra;

fn e(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![int(0); n];
    v[i] = int(1);
    v
}

/// `Q[x,y,z]/(x², y², xz, yz, xy − z²)` on the basis `1, x, y, z, u` with
/// `u = xy = z²`, and the form "coefficient of `u` in the product".
pub fn ben02() -> VecFrobeniusAlgebra {
    let (one, x, y, z, u) = (0, 1, 2, 3, 4);
    let mut products = Vec::new();
    for i in 0..5 {
        products.push((one, i, i, int(1)));
        if i != one {
            products.push((i, one, i, int(1)));
        }
    }
    products.push((x, y, u, int(1)));
    products.push((y, x, u, int(1)));
    products.push((z, z, u, int(1)));
    let mut gram = ExactMatrix::zeros(5, 5);
    for (a, b) in [(one, u), (u, one), (x, y), (y, x), (z, z)] {
        gram[(a, b)] = int(1);
    }
    VecFrobeniusAlgebra::from_sparse("ben02", 5, &products, e(5, one), gram)
        .expect("fixture is well-formed")
        .with_basis_names(&["1", "x", "y", "z", "u"])
}

/// The subalgebras generated by `{x, y}` and `{x, y + z}` in [`ben02`].
pub fn ben02_subspaces() -> (Subspace, Subspace) {
    let a = ben02();
    let x = e(5, 1);
    let y = e(5, 2);
    let y_plus_z: Vec<Rational> = y.iter().zip(e(5, 3)).map(|(p, q)| p + q).collect();
    (
        super::subalgebra_closure(&a, &[x.clone(), y]),
        super::subalgebra_closure(&a, &[x, y_plus_z]),
    )
}

/// `Q[x]/(x⁴)` with the form "coefficient of `x³`".
pub fn x4() -> VecFrobeniusAlgebra {
    let mut products = Vec::new();
    let mut gram = ExactMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            if i + j < 4 {
                products.push((i, j, i + j, int(1)));
            }
            if i + j == 3 {
                gram[(i, j)] = int(1);
            }
        }
    }
    VecFrobeniusAlgebra::from_sparse("x4", 4, &products, e(4, 0), gram)
        .expect("fixture is well-formed")
        .with_basis_names(&["1", "x", "x^2", "x^3"])
}

/// `span{1, λx² + x³}` inside [`x4`].
pub fn x4_family(lambda: &Rational) -> Subspace {
    Subspace::span_vectors(4, &[e(4, 0), vec![int(0), int(0), lambda.clone(), int(1)]])
}

/// A form on `Q³` with no multiplication: two nondegenerate lines whose sum is degenerate.
pub fn nondegsum() -> (BilinearForm, Subspace, Subspace) {
    let gram = ExactMatrix::from_i64(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 0]]);
    (
        BilinearForm::new(gram).expect("square"),
        Subspace::span_vectors(3, &[e(3, 0)]),
        Subspace::span_vectors(3, &[e(3, 1)]),
    )
}
