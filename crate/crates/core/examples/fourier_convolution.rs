// Convolution of intertwiners and its diagonalization by the Fourier transform.

use std::sync::Arc;

use froblat::exact::{int, ExactMatrix};
use froblat::frobobj::{convolution, fourier, fourier_inverse, hstar_from_hopf};
use froblat::group::FiniteGroup;
use froblat::modcat::group_algebra;

pub fn run_example() -> froblat::Result<bool> {
    let f = hstar_from_hopf(&Arc::new(group_algebra(&FiniteGroup::symmetric3())), None)?.object;
    let basis = f.endomorphism_basis()?;
    let combo = |coeffs: &[i64]| {
        basis.iter().zip(coeffs).fold(ExactMatrix::zeros(f.dim, f.dim), |acc, (m, &c)| acc.add(&m.scale(&int(c))))
    };
    let a = combo(&[1, 2, 0, -1, 3, 1]);
    let b = combo(&[0, -1, 4, 1, 1, 2]);
    let conv = convolution(&f, &a, &b);
    let via_fourier = fourier_inverse(&f, &fourier(&f, &a).mul(&fourier(&f, &b)));
    println!("End(X) has dimension {}", basis.len());
    println!("a∗b =\n{conv}");
    let id = ExactMatrix::identity(f.dim);
    let unit_law = convolution(&f, &a, &id).scale(&f.mu()) == id.scale(&f.trace(&a));
    println!("F⁻¹(F(a)∘F(b)) = a∗b: {}, μ·(a∗id) = tr(a)·id: {unit_law}", via_fourier == conv);
    Ok(via_fourier == conv && unit_law)
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
